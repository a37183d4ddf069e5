use super::{LinalgError, Matrix};

/// Products whose row or column count would exceed this are rejected.
pub const KRONECKER_MAX_DIM: usize = 10_000;

/// Block matrix `[x_ij * Y]` of size `(m p) x (n q)`.
pub fn kronecker(x: &Matrix, y: &Matrix) -> Result<Matrix, LinalgError> {
    let rows = x.rows().checked_mul(y.rows());
    let cols = x.cols().checked_mul(y.cols());
    match (rows, cols) {
        (Some(r), Some(c)) if r <= KRONECKER_MAX_DIM && c <= KRONECKER_MAX_DIM => {
            let (p, q) = (y.rows(), y.cols());
            Ok(Matrix::from_fn(r, c, |i, j| x[(i / p, j / q)] * y[(i % p, j % q)]))
        }
        _ => Err(LinalgError::TooLarge {
            rows: x.rows().saturating_mul(y.rows()),
            cols: x.cols().saturating_mul(y.cols()),
            cap: KRONECKER_MAX_DIM,
        }),
    }
}

/// Column-major stacking: `(x11, x21, ..., xm1, x12, ..., xmn)`.
pub fn vec(m: &Matrix) -> Vec<f64> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            out.push(m[(i, j)]);
        }
    }
    out
}

/// Inverse of [`vec`] for an `rows x cols` matrix.
pub fn unvec(v: &[f64], rows: usize, cols: usize) -> Result<Matrix, LinalgError> {
    if v.len() != rows * cols {
        return Err(LinalgError::Dimension(format!("vector of length {} cannot fill {rows}x{cols}", v.len())));
    }
    Ok(Matrix::from_fn(rows, cols, |i, j| v[j * rows + i]))
}
