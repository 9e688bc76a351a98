//! Seeded Erdős–Rényi corpus runs.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curvature::{curvature_from_distances, CurvatureStatus, INVARIANCE_SAMPLES};
use crate::graph::{apsp, generate, FamilySpec};
use crate::theorems::{run_battery, spectral_gap, TheoremId, TheoremReport};
use crate::{Error, Result};

/// Edge probabilities are drawn from this range when none is fixed.
pub const DEFAULT_P_RANGE: (f64, f64) = (0.15, 0.85);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Fixed edge probability; `None` draws one per graph from [`DEFAULT_P_RANGE`].
    pub p: Option<f64>,
    pub seed: u64,
    pub invariance_samples: usize,
}

impl CorpusConfig {
    pub fn new(count: usize, n_min: usize, n_max: usize, seed: u64) -> Self {
        CorpusConfig { count, n_min, n_max, p: None, seed, invariance_samples: INVARIANCE_SAMPLES }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(Error::Invalid(format!("bad vertex range {}..{}", self.n_min, self.n_max)));
        }
        if let Some(p) = self.p {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::Invalid(format!("edge probability {} outside (0, 1]", p)));
            }
        }
        Ok(())
    }

    /// Per-graph generator specs, derived sequentially from the master seed.
    pub fn specs(&self) -> Vec<FamilySpec> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|_| {
                let n = rng.random_range(self.n_min..=self.n_max);
                let p = match self.p {
                    Some(p) => p,
                    None => rng.random_range(DEFAULT_P_RANGE.0..=DEFAULT_P_RANGE.1),
                };
                FamilySpec::ErdosRenyi { n, p, seed: rng.random() }
            })
            .collect()
    }
}

/// Everything recorded about one corpus graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: usize,
    pub spec: String,
    pub n: usize,
    pub edges: usize,
    pub diameter: u32,
    pub status: CurvatureStatus,
    pub k: f64,
    pub total: f64,
    pub nullspace_dimension: usize,
    pub residual_range: [f64; 2],
    pub lambda1: f64,
    pub c_g: f64,
    pub reports: Vec<TheoremReport>,
}

impl GraphRecord {
    pub fn failures(&self) -> impl Iterator<Item = &TheoremReport> {
        self.reports.iter().filter(|r| r.failed())
    }
}

pub fn analyze_spec(index: usize, spec: &FamilySpec, invariance_samples: usize) -> Result<GraphRecord> {
    let g = generate(spec)?;
    let d = apsp(&g)?;
    let r = curvature_from_distances(&d)?;
    let s = spectral_gap(&g, &d)?;
    let seed = match spec {
        FamilySpec::ErdosRenyi { seed, .. } => *seed,
        _ => index as u64,
    };
    let reports = run_battery(&d, &r, &s, seed, invariance_samples, &TheoremId::ALL)?;
    Ok(GraphRecord {
        index,
        spec: spec.to_string(),
        n: g.n(),
        edges: g.edge_count(),
        diameter: d.diameter(),
        status: r.status,
        k: r.k.to_f64(),
        total: r.total.to_f64(),
        nullspace_dimension: r.nullspace_dimension(),
        residual_range: [r.residual_range.0.to_f64(), r.residual_range.1.to_f64()],
        lambda1: s.lambda1,
        c_g: s.c_g,
        reports,
    })
}

/// Analyzes every corpus graph in parallel; records come back in index order.
pub fn run_corpus(cfg: &CorpusConfig) -> Result<Vec<GraphRecord>> {
    cfg.validate()?;
    cfg.specs()
        .par_iter()
        .enumerate()
        .map(|(i, spec)| analyze_spec(i, spec, cfg.invariance_samples))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CgSummary {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub above_095: usize,
    pub fraction_above_095: f64,
    pub below_inv_sqrt2: usize,
    /// Counts over `[0.70,0.75), ..., [0.95,1.00]`.
    pub histogram: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub checked: usize,
    pub not_applicable: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub count: usize,
    pub statuses: BTreeMap<String, usize>,
    pub negatively_curved: usize,
    pub theorems: BTreeMap<String, TheoremTally>,
    pub total_failures: usize,
    pub failing_graphs: Vec<usize>,
    pub c_g: CgSummary,
    pub criterion_applicable: usize,
    pub criterion_holds: usize,
    /// Largest relative deviation `max |(Dw)_i / n - 1|` over inconsistent graphs.
    pub worst_pseudo_residual: f64,
}

pub fn summarize(records: &[GraphRecord]) -> CorpusSummary {
    let mut statuses = BTreeMap::new();
    let mut theorems: BTreeMap<String, TheoremTally> = BTreeMap::new();
    let mut failing_graphs = Vec::new();
    let mut total_failures = 0;
    let mut criterion_applicable = 0;
    let mut criterion_holds = 0;
    let mut worst_pseudo_residual: f64 = 0.0;
    for rec in records {
        let status = serde_plain_status(rec.status);
        *statuses.entry(status).or_insert(0) += 1;
        let mut failed_here = false;
        for rep in &rec.reports {
            let tally = theorems.entry(rep.theorem.name().to_string()).or_default();
            if rep.hypothesis_satisfied {
                tally.checked += 1;
            } else {
                tally.not_applicable += 1;
            }
            if rep.failed() {
                tally.failed += 1;
                total_failures += 1;
                failed_here = true;
            }
            if rep.theorem == TheoremId::SpectralCriterion && rep.hypothesis_satisfied {
                criterion_applicable += 1;
                if rep.comparisons.first().is_some_and(|c| c.holds) {
                    criterion_holds += 1;
                }
            }
        }
        if failed_here {
            failing_graphs.push(rec.index);
        }
        if rec.status == CurvatureStatus::Inconsistent {
            let n = rec.n as f64;
            let dev = (rec.residual_range[0] / n - 1.0).abs().max((rec.residual_range[1] / n - 1.0).abs());
            worst_pseudo_residual = worst_pseudo_residual.max(dev);
        }
    }
    let cgs: Vec<f64> = records.iter().map(|r| r.c_g).collect();
    let mut histogram = vec![0; 6];
    for &c in &cgs {
        let bin = (((c - 0.70) / 0.05).floor().max(0.0) as usize).min(5);
        histogram[bin] += 1;
    }
    let above_095 = cgs.iter().filter(|&&c| c > 0.95).count();
    let c_g = CgSummary {
        min: cgs.iter().copied().fold(f64::INFINITY, f64::min),
        max: cgs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        mean: if cgs.is_empty() { 0.0 } else { cgs.iter().sum::<f64>() / cgs.len() as f64 },
        above_095,
        fraction_above_095: if cgs.is_empty() { 0.0 } else { above_095 as f64 / cgs.len() as f64 },
        below_inv_sqrt2: cgs.iter().filter(|&&c| c < std::f64::consts::FRAC_1_SQRT_2 - 1e-9).count(),
        histogram,
    };
    CorpusSummary {
        count: records.len(),
        statuses,
        negatively_curved: records.iter().filter(|r| r.k < 0.0).count(),
        theorems,
        total_failures,
        failing_graphs,
        c_g,
        criterion_applicable,
        criterion_holds,
        worst_pseudo_residual,
    }
}

fn serde_plain_status(s: CurvatureStatus) -> String {
    match s {
        CurvatureStatus::ExactUnique => "exact_unique",
        CurvatureStatus::ExactCanonical => "exact_canonical",
        CurvatureStatus::Inconsistent => "inconsistent",
    }
    .to_string()
}
