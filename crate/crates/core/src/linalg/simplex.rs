//! Dense two-phase tableau simplex with Bland's rule.
//!
//! Intended for exact scalars: with `BigRational` every pivot is exact and
//! Bland's rule guarantees termination.

use super::Matrix;
use crate::Field;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<T> {
    Optimal { x: Vec<T>, value: T },
    /// `x + s · direction` is feasible for all `s >= 0` and the objective
    /// grows without bound along it.
    Unbounded { x: Vec<T>, direction: Vec<T> },
    Infeasible,
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
}

impl<T: Field> Tableau<T> {
    fn rhs(&self, i: usize) -> &T {
        self.rows[i].last().unwrap()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = T::one() / self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · y` over columns `< allowed`. Returns the entering
    /// column on unboundedness.
    fn run(&mut self, cost: &[T], allowed: usize) -> Result<(), usize> {
        loop {
            let basic_cost: Vec<T> = self.basis.iter().map(|&b| cost[b].clone()).collect();
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let z = self
                    .rows
                    .iter()
                    .zip(&basic_cost)
                    .filter(|(row, cb)| !row[j].is_zero() && !cb.is_zero())
                    .fold(T::zero(), |acc, (row, cb)| acc + cb.clone() * row[j].clone());
                cost[j].clone() - z > T::zero()
            });
            let Some(j) = entering else {
                return Ok(());
            };
            let mut leaving: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if *a <= T::zero() {
                    continue;
                }
                let ratio = self.rhs(i).clone() / a.clone();
                let better = match &leaving {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((i, _)) => self.pivot(i, j),
                None => return Err(j),
            }
        }
    }

    fn point(&self, width: usize) -> Vec<T> {
        let mut y = vec![T::zero(); width];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < width {
                y[b] = self.rhs(i).clone();
            }
        }
        y
    }
}

/// Maximizes `objective · x` subject to `a · x <= b` with every `x` free.
pub fn maximize<T: Field>(objective: &[T], a: &Matrix<T>, b: &[T]) -> LpOutcome<T> {
    let (m, nx) = (a.rows(), a.cols());
    assert_eq!(objective.len(), nx, "objective length");
    assert_eq!(b.len(), m, "bound length");
    let slack0 = 2 * nx;
    let art0 = slack0 + m;
    let negative: Vec<usize> = (0..m).filter(|&i| b[i] < T::zero()).collect();
    let width = art0 + negative.len();

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i] < T::zero();
        let sign = |x: T| if flip { -x } else { x };
        let mut row = vec![T::zero(); width + 1];
        for j in 0..nx {
            row[j] = sign(a[(i, j)].clone());
            row[nx + j] = sign(-a[(i, j)].clone());
        }
        row[slack0 + i] = sign(T::one());
        row[width] = sign(b[i].clone());
        if flip {
            let k = negative.iter().position(|&r| r == i).unwrap();
            row[art0 + k] = T::one();
            basis.push(art0 + k);
        } else {
            basis.push(slack0 + i);
        }
        rows.push(row);
    }
    let mut tab = Tableau { rows, basis };

    if !negative.is_empty() {
        let cost: Vec<T> = (0..width).map(|j| if j >= art0 { -T::one() } else { T::zero() }).collect();
        tab.run(&cost, width).expect("phase one is bounded");
        let infeasibility = tab
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &bcol)| bcol >= art0)
            .fold(T::zero(), |acc, (i, _)| acc + tab.rhs(i).clone());
        if infeasibility > T::zero() {
            return LpOutcome::Infeasible;
        }
        // drive zero-valued artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= art0 {
                match (0..art0).find(|&j| !tab.rows[i][j].is_zero()) {
                    Some(j) => tab.pivot(i, j),
                    None => {
                        tab.rows.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for row in tab.rows.iter_mut() {
            let rhs = row.pop().unwrap();
            row.truncate(art0);
            row.push(rhs);
        }
    }

    let cost: Vec<T> = objective
        .iter()
        .cloned()
        .chain(objective.iter().map(|c| -c.clone()))
        .chain(std::iter::repeat_n(T::zero(), m))
        .collect();
    let outcome = tab.run(&cost, art0);
    let y = tab.point(art0);
    let x: Vec<T> = (0..nx).map(|j| y[j].clone() - y[nx + j].clone()).collect();
    match outcome {
        Ok(()) => {
            let value = objective.iter().zip(&x).fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone());
            LpOutcome::Optimal { x, value }
        }
        Err(j) => {
            let mut dy = vec![T::zero(); art0];
            dy[j] = T::one();
            for (i, &bcol) in tab.basis.iter().enumerate() {
                dy[bcol] = -tab.rows[i][j].clone();
            }
            let direction = (0..nx).map(|k| dy[k].clone() - dy[nx + k].clone()).collect();
            LpOutcome::Unbounded { x, direction }
        }
    }
}
