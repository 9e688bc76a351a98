use super::Matrix;
use crate::{LinalgError, Real};

/// Sweep cap for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a symmetric matrix, sorted by eigenvalue descending.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition<T> {
    pub values: Vec<T>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: Matrix<T>,
    /// Largest off-diagonal magnitude left when the iteration stopped.
    pub residual: T,
    pub sweeps: usize,
}

impl<T: Real> EigenDecomposition<T> {
    pub fn vector(&self, k: usize) -> Vec<T> {
        (0..self.vectors.rows()).map(|i| self.vectors[(i, k)]).collect()
    }

    /// Largest `|λ|`, zero for an empty spectrum.
    pub fn spectral_radius(&self) -> T {
        self.values.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }
}

fn off_diagonal_max<T: Real>(a: &Matrix<T>) -> T {
    let n = a.rows();
    let mut m = T::zero();
    for i in 0..n {
        for j in i + 1..n {
            m = m.max(a[(i, j)].abs());
        }
    }
    m
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Stops once every off-diagonal entry is at most `1e-12` times the initial
/// Frobenius norm (floored at a few ulps for narrow types), and gives up after
/// [`MAX_SWEEPS`] sweeps.
pub fn symmetric_eigen<T: Real>(m: &Matrix<T>) -> Result<EigenDecomposition<T>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::Dimension { expected: m.rows(), got: m.cols() });
    }
    let n = m.rows();
    let scale = (0..n).flat_map(|i| m.row(i).iter()).fold(T::zero(), |acc, x| acc.max(x.abs()));
    let symmetry_tol = T::tolerance_floor(1e-12).max(T::epsilon() * T::from_f64(16.0).unwrap() * scale);
    for i in 0..n {
        for j in i + 1..n {
            let gap = (m[(i, j)] - m[(j, i)]).abs();
            if !(gap <= symmetry_tol) {
                return Err(LinalgError::NotSymmetric { i, j, gap: gap.to_f64().unwrap_or(f64::NAN) });
            }
        }
    }

    let frobenius = (0..n).flat_map(|i| m.row(i).iter()).fold(T::zero(), |acc, &x| acc + x * x).sqrt();
    let tol = T::tolerance_floor(1e-12) * frobenius;
    // symmetrize so rounding in the input cannot bias the rotations
    let half = T::from_f64(0.5).unwrap();
    let mut a = Matrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)]) * half);
    let mut v = Matrix::<T>::identity(n);

    let mut sweeps = 0;
    let mut residual = off_diagonal_max(&a);
    while residual > tol {
        if sweeps == MAX_SWEEPS {
            return Err(LinalgError::NoConvergence {
                sweeps,
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        residual = off_diagonal_max(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(y, y)].partial_cmp(&a[(x, x)]).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&k| a[(k, k)]).collect();
    let vectors = Matrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(EigenDecomposition { values, vectors, residual, sweeps })
}

/// Applies the plane rotation that annihilates `a[p][q]`, accumulating it
/// into `v`.
fn rotate<T: Real>(a: &mut Matrix<T>, v: &mut Matrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == T::zero() {
        return;
    }
    let one = T::one();
    let two = one + one;
    let theta = (a[(q, q)] - a[(p, p)]) / (two * apq);
    let t = if theta.is_infinite() {
        T::zero()
    } else {
        let t = one / (theta.abs() + (theta * theta + one).sqrt());
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let c = one / (t * t + one).sqrt();
    let s = t * c;
    let n = a.rows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = T::zero();
    a[(q, p)] = T::zero();
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}
