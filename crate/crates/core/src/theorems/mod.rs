//! Verifiers for the diameter, spectral and minimax bounds satisfied by the
//! curvature, and the spectral data they need.
//!
//! Each verifier returns a [`TheoremReport`]. A report separates "hypothesis
//! unmet" (nothing to check) from "inequality failed" (a defect). Pure
//! rational inequalities are compared exactly; anything involving a floating
//! eigenvalue or measure gets [`FLOAT_SLACK`] of one-sided slack.

mod checks;
mod spectral;

pub use checks::{
    check_bonnet_myers, check_generalized_bounds, check_generalized_for_result, check_invariance, check_lichnerowicz,
    check_minimax, check_nullspace_sum, check_product_curvature, check_reverse_bonnet_myers, minimax_battery,
    perron_alignment, run_battery, spectral_criterion, RANDOM_MEASURES,
};
pub use spectral::{laplacian, spectral_gap, SpectralInfo};

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::Rational;

/// Absolute slack granted to floating quantities.
pub const FLOAT_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `diam ≤ 2n/‖w‖₁ ≤ 2/K`, and `diam·K = 2` forces constant curvature.
    BonnetMyers,
    /// `‖w‖₁ ≥ n²/((n-1)·diam)`, equality exactly for complete graphs.
    ReverseBonnetMyers,
    /// `λ₁ ≥ ‖w‖₁/(2n²) ≥ K/(2n)`.
    Lichnerowicz,
    /// `min_a (Dν)_a ≤ n/‖w‖₁ ≤ max_b (Dν)_b` for every probability `ν`.
    Minimax,
    /// For any positive `w`: `diam ≤ ‖Dw‖∞/n · 8/K` and `λ₁ ≥ K/(8‖Dw‖∞)`.
    GeneralizedBounds,
    /// Spectral sufficient condition for solvability.
    SpectralCriterion,
    /// `c_G ≥ 1/√2`.
    PerronAlignment,
    /// `1/K = 1/K₁ + 1/K₂` for products of constant-curvature graphs.
    ProductCurvature,
    /// Nonnegative solutions share one total curvature.
    TotalCurvatureInvariance,
    /// Kernel vectors not orthogonal to `1` rule out nonnegative solutions.
    NullspaceSum,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::BonnetMyers,
        TheoremId::ReverseBonnetMyers,
        TheoremId::Lichnerowicz,
        TheoremId::Minimax,
        TheoremId::GeneralizedBounds,
        TheoremId::SpectralCriterion,
        TheoremId::PerronAlignment,
        TheoremId::ProductCurvature,
        TheoremId::TotalCurvatureInvariance,
        TheoremId::NullspaceSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::BonnetMyers => "bonnet_myers",
            TheoremId::ReverseBonnetMyers => "reverse_bonnet_myers",
            TheoremId::Lichnerowicz => "lichnerowicz",
            TheoremId::Minimax => "minimax",
            TheoremId::GeneralizedBounds => "generalized_bounds",
            TheoremId::SpectralCriterion => "spectral_criterion",
            TheoremId::PerronAlignment => "perron_alignment",
            TheoremId::ProductCurvature => "product_curvature",
            TheoremId::TotalCurvatureInvariance => "total_curvature_invariance",
            TheoremId::NullspaceSum => "nullspace_sum",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let id = match s.trim().to_ascii_lowercase().as_str() {
            "bonnet_myers" | "bm" => TheoremId::BonnetMyers,
            "reverse_bonnet_myers" | "reverse_bm" => TheoremId::ReverseBonnetMyers,
            "lichnerowicz" => TheoremId::Lichnerowicz,
            "minimax" => TheoremId::Minimax,
            "generalized_bounds" | "theorem5" | "generalized" => TheoremId::GeneralizedBounds,
            "spectral_criterion" | "criterion" => TheoremId::SpectralCriterion,
            "perron_alignment" | "perron" => TheoremId::PerronAlignment,
            "product_curvature" | "product" => TheoremId::ProductCurvature,
            "total_curvature_invariance" | "invariance" => TheoremId::TotalCurvatureInvariance,
            "nullspace_sum" => TheoremId::NullspaceSum,
            other => {
                let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                return Err(format!("unknown theorem {:?}; expected one of {}", other, names.join(", ")));
            }
        };
        Ok(id)
    }
}

/// One compared inequality `lhs <relation> rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub relation: String,
    pub lhs: f64,
    pub rhs: f64,
    #[serde(with = "crate::rational_serde::option", default)]
    pub lhs_exact: Option<Rational>,
    #[serde(with = "crate::rational_serde::option", default)]
    pub rhs_exact: Option<Rational>,
    pub holds: bool,
    /// Both sides agree (exactly for rationals, within slack otherwise).
    pub equality: bool,
}

impl Comparison {
    /// `lhs <= rhs` in exact arithmetic.
    pub fn exact_le(relation: impl Into<String>, lhs: &Rational, rhs: &Rational) -> Self {
        Comparison {
            relation: relation.into(),
            lhs: lhs.to_f64().unwrap_or(f64::NAN),
            rhs: rhs.to_f64().unwrap_or(f64::NAN),
            lhs_exact: Some(lhs.clone()),
            rhs_exact: Some(rhs.clone()),
            holds: lhs <= rhs,
            equality: lhs == rhs,
        }
    }

    /// `lhs <= rhs + FLOAT_SLACK`.
    pub fn float_le(relation: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Comparison {
            relation: relation.into(),
            lhs,
            rhs,
            lhs_exact: None,
            rhs_exact: None,
            holds: lhs <= rhs + FLOAT_SLACK,
            equality: (lhs - rhs).abs() <= FLOAT_SLACK,
        }
    }

    /// `lhs >= rhs - FLOAT_SLACK`.
    pub fn float_ge(relation: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Comparison {
            relation: relation.into(),
            lhs,
            rhs,
            lhs_exact: None,
            rhs_exact: None,
            holds: lhs + FLOAT_SLACK >= rhs,
            equality: (lhs - rhs).abs() <= FLOAT_SLACK,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub hypothesis_satisfied: bool,
    pub comparisons: Vec<Comparison>,
    /// Every check holds. Vacuously true when the hypothesis is unmet.
    pub pass: bool,
    pub notes: Vec<String>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl TheoremReport {
    pub(crate) fn new(theorem: TheoremId) -> Self {
        TheoremReport { theorem, hypothesis_satisfied: true, comparisons: Vec::new(), pass: true, notes: Vec::new(), seed: None }
    }

    pub(crate) fn unmet(theorem: TheoremId, why: impl Into<String>) -> Self {
        TheoremReport {
            theorem,
            hypothesis_satisfied: false,
            comparisons: Vec::new(),
            pass: true,
            notes: vec![format!("hypothesis unmet: {}", why.into())],
            seed: None,
        }
    }

    pub(crate) fn push(&mut self, c: Comparison) {
        self.pass &= c.holds;
        self.comparisons.push(c);
    }

    pub(crate) fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub(crate) fn fail(&mut self, s: impl Into<String>) {
        self.pass = false;
        self.notes.push(s.into());
    }

    /// Hypothesis satisfied and some check failed.
    pub fn failed(&self) -> bool {
        self.hypothesis_satisfied && !self.pass
    }

    /// Some comparison holds with equality.
    pub fn has_equality(&self) -> bool {
        self.comparisons.iter().any(|c| c.equality)
    }
}
