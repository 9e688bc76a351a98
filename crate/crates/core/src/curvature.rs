//! Curvature pipeline: distance matrix, exact solve of `D w = n·1`,
//! canonical choice among multiple solutions, pseudo-inverse fallback.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{apsp, DistanceMatrix, FamilySpec, Graph};
use crate::linalg::{lp_max_min, pseudo_apply, solve_exact, MaxMinOutcome, SolveOutcome};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurvatureStatus {
    /// `D` is invertible.
    ExactUnique,
    /// Several exact solutions; the canonical (leximin) one is reported.
    ExactCanonical,
    /// No exact solution; `w = D⁺(n·1)`.
    Inconsistent,
}

impl CurvatureStatus {
    pub fn is_exact(self) -> bool {
        !matches!(self, CurvatureStatus::Inconsistent)
    }
}

/// A number that is exact when it comes from the rational pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Value::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Approx(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CurvatureVector {
    Exact(Vec<Rational>),
    Approx(Vec<f64>),
}

impl CurvatureVector {
    pub fn len(&self) -> usize {
        match self {
            CurvatureVector::Exact(w) => w.len(),
            CurvatureVector::Approx(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exact(&self) -> Option<&[Rational]> {
        match self {
            CurvatureVector::Exact(w) => Some(w),
            CurvatureVector::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            CurvatureVector::Exact(w) => w.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect(),
            CurvatureVector::Approx(w) => w.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureResult {
    pub status: CurvatureStatus,
    pub w: CurvatureVector,
    /// `min w`.
    pub k: Value,
    /// `Σ |w_i|`.
    pub total: Value,
    /// `[min, max]` of `D·w`.
    pub residual_range: (Value, Value),
    /// Basis of `ker D`, exact in every status.
    pub nullspace: Vec<Vec<Rational>>,
    /// Set when the canonical choice is unbounded; `w` is then the
    /// particular solution and this is the improving nullspace direction.
    pub unbounded_direction: Option<Vec<Rational>>,
}

impl CurvatureResult {
    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn nullspace_dimension(&self) -> usize {
        self.nullspace.len()
    }

    /// `K < 0`: some vertex is negatively curved.
    pub fn is_negatively_curved(&self) -> bool {
        self.k.to_f64() < 0.0
    }

    /// Exact `K`, when the status is exact.
    pub fn exact_k(&self) -> Option<&Rational> {
        self.k.exact()
    }

    pub fn exact_total(&self) -> Option<&Rational> {
        self.total.exact()
    }

    /// Exact status with `K >= 0`.
    pub fn is_nonnegatively_curved(&self) -> bool {
        self.exact_k().is_some_and(|k| !k.is_negative())
    }
}

fn integer(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn min_max<T: Clone + PartialOrd>(xs: &[T]) -> (T, T) {
    let mut lo = xs[0].clone();
    let mut hi = xs[0].clone();
    for x in &xs[1..] {
        if *x < lo {
            lo = x.clone();
        }
        if *x > hi {
            hi = x.clone();
        }
    }
    (lo, hi)
}

/// Runs the full pipeline on a connected graph.
pub fn compute_curvature(g: &Graph) -> Result<CurvatureResult> {
    let d = apsp(g)?;
    curvature_from_distances(&d)
}

/// Pipeline entry point when the distance matrix is already available.
pub fn curvature_from_distances(d: &DistanceMatrix) -> Result<CurvatureResult> {
    let n = d.n();
    if n == 0 {
        return Err(Error::Invalid("empty distance matrix".into()));
    }
    let dq = d.to_rational();
    let rhs = vec![integer(n); n];
    let outcome = solve_exact(&dq, &rhs)?;

    let (status, w, nullspace, unbounded_direction) = match outcome {
        SolveOutcome::Unique(w) => (CurvatureStatus::ExactUnique, w, Vec::new(), None),
        SolveOutcome::Affine { particular, nullspace } => {
            let (w, dir) = canonical(d, &particular, &nullspace);
            (CurvatureStatus::ExactCanonical, w, nullspace, dir)
        }
        SolveOutcome::Inconsistent => {
            let dr = d.to_real();
            let w = pseudo_apply(&dr, &vec![n as f64; n])?;
            let dw = dr.mul_vec(&w);
            let (lo, hi) = min_max(&dw);
            let kernel = match solve_exact(&dq, &vec![Rational::zero(); n])? {
                SolveOutcome::Affine { nullspace, .. } => nullspace,
                _ => Vec::new(),
            };
            let (k, _) = min_max(&w);
            let total = w.iter().map(|x| x.abs()).sum();
            return Ok(CurvatureResult {
                status: CurvatureStatus::Inconsistent,
                w: CurvatureVector::Approx(w),
                k: Value::Approx(k),
                total: Value::Approx(total),
                residual_range: (Value::Approx(lo), Value::Approx(hi)),
                nullspace: kernel,
                unbounded_direction: None,
            });
        }
    };

    let dw = dq.mul_vec(&w);
    let (lo, hi) = min_max(&dw);
    let (k, _) = min_max(&w);
    let total = w.iter().fold(Rational::zero(), |acc, x| acc + x.abs());
    Ok(CurvatureResult {
        status,
        w: CurvatureVector::Exact(w),
        k: Value::Exact(k),
        total: Value::Exact(total),
        residual_range: (Value::Exact(lo), Value::Exact(hi)),
        nullspace,
        unbounded_direction,
    })
}

/// Canonical member of the affine solution family.
///
/// With constant row sums `R` the constant vector `(n/R)·1` is a solution,
/// `1` is then orthogonal to `ker D`, so every solution has the same sum and
/// the constant one is the unique maximizer of `min w`. Otherwise the exact
/// leximin program decides.
fn canonical(
    d: &DistanceMatrix,
    particular: &[Rational],
    nullspace: &[Vec<Rational>],
) -> (Vec<Rational>, Option<Vec<Rational>>) {
    let n = d.n();
    if let Some(r) = d.constant_row_sum().filter(|&r| r > 0) {
        let c = Rational::new(BigInt::from(n), BigInt::from(r));
        return (vec![c; n], None);
    }
    match lp_max_min(particular, nullspace) {
        MaxMinOutcome::Optimal { w, .. } => (w, None),
        MaxMinOutcome::Unbounded { particular, direction } => (particular, Some(direction)),
    }
}

/// Closed-form constant curvature of the vertex-transitive families.
pub fn curvature_of_family(spec: &FamilySpec) -> Result<Rational> {
    let q = |a: usize, b: usize| Rational::new(BigInt::from(a), BigInt::from(b));
    let none = || Err(Error::Invalid(format!("no closed-form curvature for {}", spec)));
    spec.validate()?;
    match *spec {
        FamilySpec::Complete(n) if n >= 2 => Ok(q(n, n - 1)),
        FamilySpec::Cycle(n) => Ok(q(n, n * n / 4)),
        FamilySpec::Hypercube(n) => Ok(q(2, n)),
        FamilySpec::CocktailParty(_) => Ok(q(1, 1)),
        FamilySpec::Johnson { n, k } => Ok(q(n, k * (n - k))),
        FamilySpec::Demicube(n) => Ok(q(4, n)),
        _ => none(),
    }
}

/// Path curvature: `n/(n-1)` at both endpoints, zero inside.
pub fn path_curvature(n: usize) -> Vec<Rational> {
    assert!(n >= 2, "path needs two vertices");
    let end = Rational::new(BigInt::from(n), BigInt::from(n - 1));
    (0..n).map(|i| if i == 0 || i == n - 1 { end.clone() } else { Rational::zero() }).collect()
}

/// Outcome of sampling the affine solution family for nonnegative members.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub samples: usize,
    pub nonnegative_found: usize,
    /// No nonnegative member besides possibly `w` itself was compared.
    pub vacuous: bool,
    #[serde(with = "crate::rational_serde::option")]
    pub reference_total: Option<Rational>,
    pub pass: bool,
    pub seed: u64,
}

/// Default draw count for [`total_curvature_invariance_check`].
pub const INVARIANCE_SAMPLES: usize = 10_000;

/// Draws `w + Σ c_j z_j` with each `c_j` uniform on `[-2, 2]` (step 1/1000)
/// and checks that every nonnegative draw has the same `ℓ¹` norm.
pub fn total_curvature_invariance_check(result: &CurvatureResult, samples: usize, seed: u64) -> InvarianceReport {
    let mut report = InvarianceReport {
        samples: 0,
        nonnegative_found: 0,
        vacuous: true,
        reference_total: None,
        pass: true,
        seed,
    };
    let (Some(w), false) = (result.w.exact(), result.nullspace.is_empty()) else {
        return report;
    };
    let l1 = |v: &[Rational]| v.iter().fold(Rational::zero(), |acc, x| acc + x.abs());
    if !w.iter().any(Signed::is_negative) {
        report.reference_total = Some(l1(w));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut compared = 0;
    for _ in 0..samples {
        let mut candidate = w.to_vec();
        for z in &result.nullspace {
            let c = Rational::new(BigInt::from(rng.random_range(-2000i64..=2000)), BigInt::from(1000));
            if c.is_zero() {
                continue;
            }
            for (x, zi) in candidate.iter_mut().zip(z) {
                if !zi.is_zero() {
                    *x += &c * zi;
                }
            }
        }
        report.samples += 1;
        if candidate.iter().any(Signed::is_negative) {
            continue;
        }
        report.nonnegative_found += 1;
        let total = l1(&candidate);
        match &report.reference_total {
            None => report.reference_total = Some(total),
            Some(reference) => {
                compared += 1;
                if *reference != total {
                    report.pass = false;
                }
            }
        }
    }
    report.vacuous = compared == 0;
    report
}

/// Entry sums of the `ker D` basis vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NullspaceSumReport {
    #[serde(with = "crate::rational_serde::vec")]
    pub sums: Vec<Rational>,
    /// Some kernel vector is not orthogonal to the constant vector.
    pub exceptional: bool,
}

pub fn nullspace_sum_check(result: &CurvatureResult) -> NullspaceSumReport {
    let sums: Vec<Rational> = result
        .nullspace
        .iter()
        .map(|z| z.iter().fold(Rational::zero(), |acc, x| acc + x))
        .collect();
    let exceptional = sums.iter().any(|s| !s.is_zero());
    NullspaceSumReport { sums, exceptional }
}
