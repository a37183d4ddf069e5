use super::{kronecker, matrix_abs, polar_factor, vec, LinalgError, Matrix};
use crate::energy::{adjacency_matrix, degree_matrix, extended_adjacency_matrix};
use crate::graph::Graph;

/// Residuals of the two matrix identities linking `A`, `A_ex` and the
/// degree matrix `D`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SIdentityResidual {
    /// `max |A_ex - (D A D^-1 + D^-1 A D) / 2|`.
    pub precursor: f64,
    /// `max |vec(|A_ex|) - S vec(|A|)|`.
    pub vec_abs: f64,
}

/// Builds `S = 1/2 (U (x) I)((D^-1 (x) D) + (D (x) D^-1))(V^T (x) I)` with
/// `A_ex = |A_ex| U`, `A = |A| V`, and measures how far `S vec(|A|)` lands
/// from `vec(|A_ex|)`.
///
/// Needs every degree positive so that `D` is invertible.
pub fn verify_s_identity(g: &Graph) -> Result<SIdentityResidual, LinalgError> {
    if g.has_isolated_vertex() {
        return Err(LinalgError::IsolatedVertex);
    }
    let n = g.order();
    let a = adjacency_matrix(g);
    let a_ex = extended_adjacency_matrix(g);
    let d = degree_matrix(g).into_matrix();
    let d_inv = Matrix::diagonal(&(0..n).map(|i| 1.0 / d[(i, i)]).collect::<Vec<_>>());

    let a_m = a.as_matrix();
    let precursor_form = (&(&(&d * a_m) * &d_inv) + &(&(&d_inv * a_m) * &d)).scale(0.5);
    let precursor = precursor_form.max_abs_diff(a_ex.as_matrix());

    let u = polar_factor(&a_ex)?;
    let v = polar_factor(&a)?;
    let identity = Matrix::identity(n);
    let middle = &kronecker(&d_inv, &d)? + &kronecker(&d, &d_inv)?;
    let left = kronecker(u.as_matrix(), &identity)?;
    let right = kronecker(&v.as_matrix().transpose(), &identity)?;
    let s = (&(&left * &middle) * &right).scale(0.5);

    let predicted = s.matvec(&vec(matrix_abs(&a)?.as_matrix()))?;
    let actual = vec(matrix_abs(&a_ex)?.as_matrix());
    let vec_abs = predicted.iter().zip(&actual).fold(0.0_f64, |m, (p, q)| m.max((p - q).abs()));
    Ok(SIdentityResidual { precursor, vec_abs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn regular_graph_is_exact() {
        let r = verify_s_identity(&cycle(5).unwrap()).unwrap();
        assert_eq!(r.precursor, 0.0);
        assert!(r.vec_abs <= 1e-8);
    }

    #[test]
    fn path_three() {
        let r = verify_s_identity(&path(3).unwrap()).unwrap();
        assert!(r.precursor <= 1e-12);
        assert!(r.vec_abs <= 1e-8);
    }

    #[test]
    fn random_connected_graphs() {
        let mut checked = 0;
        let mut stream = 0;
        while checked < 20 {
            let n = 2 + (stream as usize % 9);
            let g = random_gnp_stream(n, 0.5, 99, stream).unwrap();
            stream += 1;
            if !g.is_connected() {
                continue;
            }
            let r = verify_s_identity(&g).unwrap();
            assert!(r.precursor <= 1e-12 && r.vec_abs <= 1e-8, "{g}: {r:?}");
            checked += 1;
        }
    }

    #[test]
    fn isolated_vertex_is_not_applicable() {
        let g = path(3).unwrap().disjoint_union(&empty(1).unwrap());
        assert_eq!(verify_s_identity(&g), Err(LinalgError::IsolatedVertex));
    }
}
