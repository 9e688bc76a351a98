use super::{maximize, LpOutcome, Matrix};
use crate::Field;

/// Canonical point of an affine solution family.
#[derive(Debug, Clone, PartialEq)]
pub enum MaxMinOutcome<T> {
    /// `w = particular + Σ coefficients[j] · nullspace[j]`, with `min = min w`.
    Optimal { w: Vec<T>, coefficients: Vec<T>, min: T },
    /// `min w` grows without bound along `direction` (nullspace coefficients).
    Unbounded { particular: Vec<T>, direction: Vec<T> },
}

/// Picks the leximin point of `{particular + N·c}`: first maximize the
/// smallest entry, then, holding entries that cannot rise above that level,
/// maximize the smallest of the rest, and so on until every entry is pinned.
///
/// Every stage is an exact simplex solve. Since the nullspace basis is
/// linearly independent the final point is unique, so no further tie-break
/// is needed.
pub fn lp_max_min<T: Field>(particular: &[T], nullspace: &[Vec<T>]) -> MaxMinOutcome<T> {
    let n = particular.len();
    let m = nullspace.len();
    assert!(nullspace.iter().all(|z| z.len() == n), "basis vector length");
    let at = |c: &[T], i: usize| -> T {
        (0..m).fold(particular[i].clone(), |acc, j| acc + c[j].clone() * nullspace[j][i].clone())
    };
    if m == 0 {
        let min = particular.iter().cloned().reduce(|a, b| if b < a { b } else { a }).unwrap_or_else(T::zero);
        return MaxMinOutcome::Optimal { w: particular.to_vec(), coefficients: Vec::new(), min };
    }

    // level[i] is Some(v) once entry i is pinned at v
    let mut level: Vec<Option<T>> = vec![None; n];
    let mut coefficients = vec![T::zero(); m];
    let mut first_min: Option<T> = None;
    while level.iter().any(Option::is_none) {
        // max t  s.t.  w_i >= t (free i),  w_i >= level_i (pinned i);  variables (c, t)
        let mut rows = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for i in 0..n {
            let mut row: Vec<T> = (0..m).map(|j| -nullspace[j][i].clone()).collect();
            match &level[i] {
                None => {
                    row.push(T::one());
                    b.push(particular[i].clone());
                }
                Some(v) => {
                    row.push(T::zero());
                    b.push(particular[i].clone() - v.clone());
                }
            }
            rows.push(row);
        }
        let mut objective = vec![T::zero(); m];
        objective.push(T::one());
        let (c, t) = match maximize(&objective, &Matrix::from_rows(rows), &b) {
            LpOutcome::Optimal { mut x, value } => {
                x.pop();
                (x, value)
            }
            LpOutcome::Unbounded { direction, .. } => {
                return MaxMinOutcome::Unbounded { particular: particular.to_vec(), direction: direction[..m].to_vec() };
            }
            LpOutcome::Infeasible => unreachable!("the previous stage's optimum stays feasible"),
        };
        first_min.get_or_insert_with(|| t.clone());

        // an entry is pinned when no point of the current optimal face lifts it above t
        let free: Vec<usize> = (0..n).filter(|&i| level[i].is_none()).collect();
        let mut pinned = Vec::new();
        for &i in &free {
            if at(&c, i) > t {
                continue;
            }
            let rows: Vec<Vec<T>> = (0..n).map(|k| (0..m).map(|j| -nullspace[j][k].clone()).collect()).collect();
            let b: Vec<T> = (0..n)
                .map(|k| particular[k].clone() - level[k].clone().unwrap_or_else(|| t.clone()))
                .collect();
            let objective: Vec<T> = (0..m).map(|j| nullspace[j][i].clone()).collect();
            let stuck = match maximize(&objective, &Matrix::from_rows(rows), &b) {
                LpOutcome::Optimal { value, .. } => particular[i].clone() + value <= t,
                _ => false,
            };
            if stuck {
                pinned.push(i);
            }
        }
        if pinned.is_empty() {
            // cannot happen for exact arithmetic; pin the tight entries to guarantee progress
            pinned = free.iter().copied().filter(|&i| at(&c, i) <= t).collect();
        }
        for i in pinned {
            level[i] = Some(t.clone());
        }
        coefficients = c;
    }

    let w: Vec<T> = (0..n).map(|i| at(&coefficients, i)).collect();
    MaxMinOutcome::Optimal { w, coefficients, min: first_min.unwrap() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn empty_nullspace_passes_through() {
        let p = vec![q(3, 2), q(0, 1), q(3, 2)];
        assert_eq!(
            lp_max_min(&p, &[]),
            MaxMinOutcome::Optimal { w: p.clone(), coefficients: vec![], min: q(0, 1) }
        );
    }

    #[test]
    fn symmetric_pair() {
        let out = lp_max_min(&ints(&[1, 1]), &[ints(&[1, -1])]);
        assert_eq!(out, MaxMinOutcome::Optimal { w: ints(&[1, 1]), coefficients: ints(&[0]), min: q(1, 1) });
    }

    #[test]
    fn flat_minimum_is_refined() {
        // min stays 0 for every c in [0, 2]; the second level balances the first two entries
        let out = lp_max_min(&ints(&[2, 0, 0]), &[ints(&[-1, 1, 0])]);
        assert_eq!(out, MaxMinOutcome::Optimal { w: ints(&[1, 1, 0]), coefficients: ints(&[1]), min: q(0, 1) });
    }

    #[test]
    fn unbounded_reports_direction() {
        let MaxMinOutcome::Unbounded { direction, .. } = lp_max_min(&ints(&[0, 0]), &[ints(&[1, 1])]) else {
            panic!("expected unbounded");
        };
        assert!(direction[0] > q(0, 1));
    }

    #[test]
    fn two_directions() {
        // w = (c1, c2, 3 - c1 - c2): leximin is the constant vector (1,1,1)
        let out = lp_max_min(&ints(&[0, 0, 3]), &[ints(&[1, 0, -1]), ints(&[0, 1, -1])]);
        assert_eq!(out, MaxMinOutcome::Optimal { w: ints(&[1, 1, 1]), coefficients: ints(&[1, 1]), min: q(1, 1) });
    }
}
