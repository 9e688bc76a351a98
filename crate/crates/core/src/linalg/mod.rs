//! Numeric kernels: exact elimination and simplex over any [`Field`],
//! Jacobi eigendecomposition and pseudo-inverse over any [`Real`].
//!
//! [`Field`]: crate::Field
//! [`Real`]: crate::Real

mod gauss;
mod jacobi;
mod matrix;
mod maxmin;
mod pinv;
mod simplex;

pub use gauss::{rank, solve_exact, SolveOutcome};
pub use jacobi::{symmetric_eigen, EigenDecomposition, MAX_SWEEPS};
pub use matrix::Matrix;
pub use maxmin::{lp_max_min, MaxMinOutcome};
pub use pinv::{pseudo_apply, pseudo_apply_with};
pub use simplex::{maximize, LpOutcome};
