//! Equilibrium-measure curvature of finite connected graphs.
//!
//! For a connected graph on `n` vertices with hop-count distance matrix `D`,
//! the curvature vector `w` solves `D w = n·1`. Each entry is the curvature
//! at that vertex, `K = min w` is the lower curvature bound and `‖w‖₁` the
//! total curvature. This crate builds `D`, classifies the system exactly
//! (unique, affine family, or inconsistent), picks a canonical solution when
//! several exist, falls back to the pseudo-inverse when none does, and checks
//! the diameter, spectral-gap and minimax bounds that the curvature obeys.
//!
//! The linear-algebra kernels are generic over the scalar: exact routines
//! ([`linalg::solve_exact`], [`linalg::lp_max_min`]) accept any [`Field`],
//! floating routines ([`linalg::symmetric_eigen`], [`linalg::pseudo_apply`])
//! accept any [`Real`]. The aliases below fix the concrete types used by the
//! curvature pipeline.

pub mod corpus;
pub mod curvature;
mod error;
pub mod graph;
pub mod linalg;
pub mod rational_serde;
mod scalar;
pub mod theorems;

pub use error::{Error, GraphError, LinalgError};
pub use scalar::{Field, Real};

pub use curvature::{compute_curvature, curvature_from_distances, CurvatureResult, CurvatureStatus, CurvatureVector};
pub use graph::{DistanceMatrix, FamilySpec, Graph};
pub use theorems::{SpectralInfo, TheoremId, TheoremReport};

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Dense matrix of exact rationals.
pub type RationalMatrix = linalg::Matrix<Rational>;

/// Dense binary64 matrix.
pub type RealMatrix = linalg::Matrix<f64>;

/// Exact solve outcome over [`Rational`].
pub type ExactSolveOutcome = linalg::SolveOutcome<Rational>;

/// Eigendecomposition in binary64.
pub type Eigen = linalg::EigenDecomposition<f64>;

/// Result alias used across the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;
