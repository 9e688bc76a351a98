use super::Matrix;
use crate::{Field, LinalgError};

/// Exact classification of a linear system `m · x = rhs`.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome<T> {
    Unique(Vec<T>),
    /// `particular + span(nullspace)`; the basis vectors are linearly
    /// independent and each is annihilated by `m`.
    Affine { particular: Vec<T>, nullspace: Vec<Vec<T>> },
    Inconsistent,
}

impl<T> SolveOutcome<T> {
    pub fn is_solvable(&self) -> bool {
        !matches!(self, SolveOutcome::Inconsistent)
    }

    pub fn nullity(&self) -> usize {
        match self {
            SolveOutcome::Affine { nullspace, .. } => nullspace.len(),
            _ => 0,
        }
    }
}

/// Result of reducing `m` (optionally augmented) to reduced row echelon form.
struct Echelon<T> {
    rows: Vec<Vec<T>>,
    /// `pivots[r]` is the pivot column of row `r`.
    pivots: Vec<usize>,
}

/// Gauss-Jordan elimination on the first `width` columns of `rows`.
fn reduce<T: Field>(mut rows: Vec<Vec<T>>, width: usize) -> Echelon<T> {
    let height = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == height {
            break;
        }
        let Some(p) = (r..height).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for x in rows[r][c..].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let (before, rest) = rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots }
}

/// Solves `m · x = rhs` exactly by Gauss-Jordan elimination. `m` may be
/// rectangular.
///
/// Classification involves no tolerance: with an exact `T` the trichotomy
/// unique / affine / inconsistent is decided by exact zero tests.
pub fn solve_exact<T: Field>(m: &Matrix<T>, rhs: &[T]) -> Result<SolveOutcome<T>, LinalgError> {
    if rhs.len() != m.rows() {
        return Err(LinalgError::Dimension { expected: m.rows(), got: rhs.len() });
    }
    let n = m.cols();
    let augmented: Vec<Vec<T>> = (0..m.rows())
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let Echelon { rows, pivots } = reduce(augmented, n);
    let rank = pivots.len();
    if rows[rank..].iter().any(|row| !row[n].is_zero()) {
        return Ok(SolveOutcome::Inconsistent);
    }
    let mut particular = vec![T::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = rows[r][n].clone();
    }
    if rank == n {
        return Ok(SolveOutcome::Unique(particular));
    }
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let nullspace = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut z = vec![T::zero(); n];
            z[f] = T::one();
            for (r, &c) in pivots.iter().enumerate() {
                z[c] = -rows[r][f].clone();
            }
            z
        })
        .collect();
    Ok(SolveOutcome::Affine { particular, nullspace })
}

/// Exact rank of `m`.
pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    let rows = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    reduce(rows, m.cols()).pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, RationalMatrix};
    use num_rational::Ratio;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn int_matrix(rows: &[&[i64]]) -> RationalMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect())
    }

    #[test]
    fn path_three_is_unique() {
        let d = int_matrix(&[&[0, 1, 2], &[1, 0, 1], &[2, 1, 0]]);
        let rhs = vec![q(3, 1); 3];
        assert_eq!(solve_exact(&d, &rhs).unwrap(), SolveOutcome::Unique(vec![q(3, 2), q(0, 1), q(3, 2)]));
    }

    #[test]
    fn identity_returns_rhs() {
        let rhs = vec![q(1, 3), q(-7, 2), q(5, 1), q(0, 1)];
        assert_eq!(solve_exact(&RationalMatrix::identity(4), &rhs).unwrap(), SolveOutcome::Unique(rhs));
    }

    #[test]
    fn complete_multipartite_1114_is_inconsistent() {
        // K_{1,1,1,4}: singletons adjacent to everything, the 4-part is independent
        let mut rows = vec![vec![0i64; 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                rows[i][j] = if i == j { 0 } else if i >= 3 && j >= 3 { 2 } else { 1 };
            }
        }
        let d = Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|x| q(x, 1)).collect()).collect());
        assert_eq!(solve_exact(&d, &vec![q(7, 1); 7]).unwrap(), SolveOutcome::Inconsistent);
        assert_eq!(rank(&d), 6);
    }

    #[test]
    fn affine_family_is_certified() {
        // C_4 distance matrix has a one-dimensional kernel
        let d = int_matrix(&[&[0, 1, 2, 1], &[1, 0, 1, 2], &[2, 1, 0, 1], &[1, 2, 1, 0]]);
        let rhs = vec![q(4, 1); 4];
        let SolveOutcome::Affine { particular, nullspace } = solve_exact(&d, &rhs).unwrap() else {
            panic!("expected affine family");
        };
        assert_eq!(d.mul_vec(&particular), rhs);
        assert_eq!(nullspace.len(), 1);
        assert!(d.mul_vec(&nullspace[0]).iter().all(|x| *x == q(0, 1)));
    }

    #[test]
    fn zero_matrix() {
        let z = RationalMatrix::zeros(2, 2);
        assert_eq!(solve_exact(&z, &[q(0, 1), q(0, 1)]).unwrap().nullity(), 2);
        assert_eq!(solve_exact(&z, &[q(1, 1), q(0, 1)]).unwrap(), SolveOutcome::Inconsistent);
    }

    #[test]
    fn dimension_errors() {
        let m = RationalMatrix::identity(2);
        assert!(matches!(solve_exact(&m, &[q(0, 1)]), Err(LinalgError::Dimension { .. })));
    }

    #[test]
    fn rectangular_systems() {
        // x + y = 2, x - y = 0, 2x = 2
        let m = RationalMatrix::from_rows(vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)], vec![q(2, 1), q(0, 1)]]);
        assert_eq!(solve_exact(&m, &[q(2, 1), q(0, 1), q(2, 1)]).unwrap(), SolveOutcome::Unique(vec![q(1, 1), q(1, 1)]));
        assert_eq!(solve_exact(&m, &[q(2, 1), q(0, 1), q(3, 1)]).unwrap(), SolveOutcome::Inconsistent);
        let wide = RationalMatrix::from_rows(vec![vec![q(1, 1), q(1, 1), q(1, 1)]]);
        assert_eq!(solve_exact(&wide, &[q(3, 1)]).unwrap().nullity(), 2);
    }

    #[test]
    fn works_over_machine_rationals() {
        let m: Matrix<Ratio<i64>> = Matrix::from_rows(vec![
            vec![Ratio::from(2), Ratio::from(1)],
            vec![Ratio::from(1), Ratio::from(3)],
        ]);
        let out = solve_exact(&m, &[Ratio::from(3), Ratio::from(4)]).unwrap();
        assert_eq!(out, SolveOutcome::Unique(vec![Ratio::from(1), Ratio::from(1)]));
    }
}
