use super::{symmetric_eigen, EigenDecomposition, Matrix};
use crate::{LinalgError, Real};

/// Minimum-norm least-squares solution of `m · x = rhs` for symmetric `m`,
/// i.e. `m⁺ · rhs`.
///
/// Eigen-directions with `|λ| <= n · 1e-10 · max|λ|` are treated as kernel.
pub fn pseudo_apply<T: Real>(m: &Matrix<T>, rhs: &[T]) -> Result<Vec<T>, LinalgError> {
    let eigen = symmetric_eigen(m)?;
    pseudo_apply_with(&eigen, rhs)
}

/// [`pseudo_apply`] reusing an existing decomposition.
pub fn pseudo_apply_with<T: Real>(eigen: &EigenDecomposition<T>, rhs: &[T]) -> Result<Vec<T>, LinalgError> {
    let n = eigen.values.len();
    if rhs.len() != n {
        return Err(LinalgError::Dimension { expected: n, got: rhs.len() });
    }
    let cutoff = T::from_usize(n).unwrap() * T::from_f64(1e-10).unwrap() * eigen.spectral_radius();
    let mut x = vec![T::zero(); n];
    for (k, &lambda) in eigen.values.iter().enumerate() {
        if lambda.abs() <= cutoff {
            continue;
        }
        let v = eigen.vector(k);
        let coeff = v.iter().zip(rhs).fold(T::zero(), |acc, (&a, &b)| acc + a * b) / lambda;
        for (xi, vi) in x.iter_mut().zip(&v) {
            *xi = *xi + coeff * *vi;
        }
    }
    Ok(x)
}
