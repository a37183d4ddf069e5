use super::{LinalgError, Matrix, SymmetricMatrix};

/// Convergence when the off-diagonal Frobenius norm drops to this fraction
/// of the input's Frobenius norm.
pub const JACOBI_REL_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Orthogonal spectral factorisation `A = W diag(values) W^T`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    /// Non-increasing.
    pub values: Vec<f64>,
    /// Column `r` is the unit eigenvector for `values[r]`.
    pub vectors: Matrix,
}

impl EigenDecomposition {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `W diag(f(values)) W^T`, symmetric by construction.
    pub fn spectral_map(&self, f: impl Fn(f64) -> f64) -> SymmetricMatrix {
        let n = self.order();
        let w = &self.vectors;
        let mapped: Vec<f64> = self.values.iter().map(|&v| f(v)).collect();
        SymmetricMatrix::from_lower(n, |i, j| (0..n).map(|r| w[(i, r)] * mapped[r] * w[(j, r)]).sum())
    }

    /// `max |W^T W - I|`.
    pub fn orthogonality_residual(&self) -> f64 {
        let w = &self.vectors;
        let gram = &w.transpose() * w;
        gram.max_abs_diff(&Matrix::identity(self.order()))
    }

    /// `max |A - W diag(values) W^T|`.
    pub fn reconstruction_residual(&self, a: &SymmetricMatrix) -> f64 {
        self.spectral_map(|v| v).as_matrix().max_abs_diff(a.as_matrix())
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0, |r: f64, v| r.max(v.abs()))
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi eigensolver for a dense symmetric matrix.
///
/// Row-cyclic sweeps of plane rotations, each annihilating one off-diagonal
/// pair. Stops once the off-diagonal Frobenius norm is at most
/// `JACOBI_REL_TOL * ||A||_F`. Eigenvalues are returned in non-increasing
/// order; ties keep the order of the diagonal they converged on.
pub fn eig_symmetric(m: &SymmetricMatrix) -> Result<EigenDecomposition, LinalgError> {
    let n = m.order();
    let src = m.as_matrix();
    for i in 0..n {
        for j in 0..n {
            if !src[(i, j)].is_finite() {
                return Err(LinalgError::NonFinite(i, j));
            }
        }
    }

    let mut a = src.as_slice().to_vec();
    let mut v = Matrix::identity(n).as_slice().to_vec();
    let threshold = JACOBI_REL_TOL * src.frobenius();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= threshold {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(LinalgError::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r != p && r != q {
                        let arp = a[r * n + p];
                        let arq = a[r * n + q];
                        let new_p = c * arp - s * arq;
                        let new_q = s * arp + c * arq;
                        a[r * n + p] = new_p;
                        a[p * n + r] = new_p;
                        a[r * n + q] = new_q;
                        a[q * n + r] = new_q;
                    }
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[y * n + y].total_cmp(&a[x * n + x]));
    let values = order.iter().map(|&k| a[k * n + k]).collect();
    let vectors = Matrix::from_fn(n, n, |i, r| v[i * n + order[r]]);
    Ok(EigenDecomposition { values, vectors })
}
