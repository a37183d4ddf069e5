use super::{eig_symmetric, LinalgError, Matrix, SymmetricMatrix};

/// Square matrix with orthonormal columns.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalFactor(Matrix);

impl OrthogonalFactor {
    pub fn order(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    /// `max |Q^T Q - I|`.
    pub fn orthogonality_residual(&self) -> f64 {
        (&self.0.transpose() * &self.0).max_abs_diff(&Matrix::identity(self.order()))
    }
}

/// `|M| = (M M^T)^(1/2) = W diag(|lambda|) W^T`.
pub fn matrix_abs(m: &SymmetricMatrix) -> Result<SymmetricMatrix, LinalgError> {
    Ok(eig_symmetric(m)?.spectral_map(f64::abs))
}

/// Orthogonal `U` with `M = |M| U`.
///
/// With `M = P D P^T`, let `Q` be `P` with column `i` negated whenever
/// `alpha_i <= 0`; then `U = Q P^T`. Zero eigenvalues take the negated
/// branch.
pub fn polar_factor(m: &SymmetricMatrix) -> Result<OrthogonalFactor, LinalgError> {
    let eig = eig_symmetric(m)?;
    let p = &eig.vectors;
    let n = eig.order();
    let q = Matrix::from_fn(n, n, |i, r| if eig.values[r] > 0.0 { p[(i, r)] } else { -p[(i, r)] });
    Ok(OrthogonalFactor(&q * &p.transpose()))
}
