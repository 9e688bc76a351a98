//! JSON report schema, version "1".

use equicurv::graph::DistanceMatrix;
use equicurv::{CurvatureResult, CurvatureStatus, Rational, SpectralInfo, TheoremReport};
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// Rational carried as a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exact(#[serde(with = "equicurv::rational_serde")] pub Rational);

impl Exact {
    fn approx(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphMeta {
    pub source: String,
    pub n: usize,
    pub edges: usize,
    pub diameter: u32,
    /// Mean of all `n²` entries of `D`, diagonal included.
    pub avdiam: Exact,
    pub avdiam_approx: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureSection {
    pub status: CurvatureStatus,
    /// Exact entries; `null` for the pseudo-inverse fallback.
    pub w: Option<Vec<Exact>>,
    pub w_approx: Vec<f64>,
    #[serde(rename = "K")]
    pub k: Option<Exact>,
    #[serde(rename = "K_approx")]
    pub k_approx: f64,
    pub total: Option<Exact>,
    pub total_approx: f64,
    /// `[min, max]` of `D·w`.
    pub residual_range: [f64; 2],
    pub residual_range_exact: Option<[Exact; 2]>,
    /// `residual_range / n`.
    pub residual_ratio: [f64; 2],
    pub nullspace_dimension: usize,
    /// Improving kernel direction when the canonical choice is unbounded.
    pub unbounded: Option<Vec<Exact>>,
    pub negatively_curved: bool,
    /// The values are a least-squares fallback, not a solution.
    pub pseudo: bool,
    pub max_w_approx: f64,
    /// `n / ⌊n²/4⌋`, the cycle value of `max w`.
    pub cycle_max_w: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: String,
    pub tool_version: String,
    pub seed: u64,
    pub graph: GraphMeta,
    pub curvature: CurvatureSection,
    pub spectral: Option<SpectralInfo>,
    pub theorems: Vec<TheoremReport>,
    /// Verifiers whose hypothesis held and whose check failed.
    pub failures: usize,
}

fn exact_vec(v: &[Rational]) -> Vec<Exact> {
    v.iter().cloned().map(Exact).collect()
}

impl CurvatureSection {
    pub fn new(r: &CurvatureResult) -> Self {
        let n = r.n();
        let w_approx = r.w.to_f64();
        let residual_range = [r.residual_range.0.to_f64(), r.residual_range.1.to_f64()];
        let residual_range_exact = match (r.residual_range.0.exact(), r.residual_range.1.exact()) {
            (Some(lo), Some(hi)) => Some([Exact(lo.clone()), Exact(hi.clone())]),
            _ => None,
        };
        let nf = n as f64;
        CurvatureSection {
            status: r.status,
            w: r.w.exact().map(exact_vec),
            k: r.exact_k().cloned().map(Exact),
            k_approx: r.k.to_f64(),
            total: r.exact_total().cloned().map(Exact),
            total_approx: r.total.to_f64(),
            residual_range,
            residual_range_exact,
            residual_ratio: [residual_range[0] / nf, residual_range[1] / nf],
            nullspace_dimension: r.nullspace_dimension(),
            unbounded: r.unbounded_direction.as_deref().map(exact_vec),
            negatively_curved: match r.exact_k() {
                Some(k) => k.is_negative(),
                None => r.is_negatively_curved(),
            },
            pseudo: !r.status.is_exact(),
            max_w_approx: w_approx.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            cycle_max_w: nf / (n * n / 4).max(1) as f64,
            w_approx,
        }
    }
}

impl GraphMeta {
    pub fn new(source: String, edges: usize, d: &DistanceMatrix) -> Self {
        let avdiam = Exact(d.average_distance());
        GraphMeta { source, n: d.n(), edges, diameter: d.diameter(), avdiam_approx: avdiam.approx(), avdiam }
    }
}

impl AnalysisReport {
    pub fn new(
        graph: GraphMeta,
        r: &CurvatureResult,
        spectral: Option<SpectralInfo>,
        theorems: Vec<TheoremReport>,
        seed: u64,
    ) -> Self {
        AnalysisReport {
            schema_version: SCHEMA_VERSION.into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            seed,
            graph,
            curvature: CurvatureSection::new(r),
            spectral,
            failures: theorems.iter().filter(|t| t.failed()).count(),
            theorems,
        }
    }
}
