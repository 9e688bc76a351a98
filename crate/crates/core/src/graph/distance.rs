use num_bigint::BigInt;
use rayon::prelude::*;

use super::Graph;
use crate::{GraphError, Rational, RationalMatrix, RealMatrix};

/// Symmetric matrix of shortest-path hop counts of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

/// All-pairs hop distances by one BFS per source vertex.
pub fn apsp(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.n();
    let rows: Vec<Vec<u32>> = (0..n)
        .into_par_iter()
        .map(|s| g.bfs(s).into_iter().collect::<Option<Vec<u32>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or(GraphError::Disconnected)?;
    Ok(DistanceMatrix { n, entries: rows.concat() })
}

impl DistanceMatrix {
    /// Wraps raw row-major entries without validation. Used by tests that
    /// need to feed a hand-written metric.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square rows");
        DistanceMatrix { n, entries: rows.concat() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn diameter(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Mean of all `n²` entries, zero diagonal included.
    pub fn average_distance(&self) -> Rational {
        let total: u64 = self.entries.iter().map(|&d| u64::from(d)).sum();
        let n = self.n as u64;
        Rational::new(BigInt::from(total), BigInt::from(n * n))
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.rows().map(|r| r.iter().map(|&d| u64::from(d)).sum()).collect()
    }

    /// The common row sum `R` when every row sums to the same value; the
    /// constant vector `(n/R)·1` then solves the curvature system.
    pub fn constant_row_sum(&self) -> Option<u64> {
        let sums = self.row_sums();
        let first = *sums.first()?;
        sums.iter().all(|&s| s == first).then_some(first)
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.n, self.n, |i, j| Rational::from_integer(BigInt::from(self.get(i, j))))
    }

    pub fn to_real(&self) -> RealMatrix {
        RealMatrix::from_fn(self.n, self.n, |i, j| f64::from(self.get(i, j)))
    }

    /// Checks symmetry, zero diagonal, positivity off the diagonal, the
    /// triangle inequality and that unit distances are exactly the edges.
    pub fn check_invariants(&self, g: &Graph) -> Result<(), String> {
        let n = self.n;
        if g.n() != n {
            return Err(format!("dimension {} vs {} vertices", n, g.n()));
        }
        for i in 0..n {
            if self.get(i, i) != 0 {
                return Err(format!("d({i},{i}) != 0"));
            }
            for j in 0..n {
                let d = self.get(i, j);
                if d != self.get(j, i) {
                    return Err(format!("asymmetric at ({i},{j})"));
                }
                if i != j && d == 0 {
                    return Err(format!("d({i},{j}) = 0"));
                }
                if (d == 1) != g.has_edge(i, j) {
                    return Err(format!("d({i},{j}) = {d} disagrees with adjacency"));
                }
                for k in 0..n {
                    if self.get(i, k) > d + self.get(j, k) {
                        return Err(format!("triangle inequality fails at ({i},{j},{k})"));
                    }
                }
            }
        }
        Ok(())
    }
}
