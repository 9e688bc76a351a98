use std::fmt::Debug;

use num_traits::{Float, FromPrimitive, Num, Signed};

/// Scalars with exact field arithmetic, as used by the elimination and
/// simplex kernels. Zero tests are exact, so only instantiate with exact
/// types (`BigRational`, `Ratio<i64>`, ...) when classification matters.
pub trait Field: Clone + Debug + PartialOrd + Num + Signed {}

impl<T> Field for T where T: Clone + Debug + PartialOrd + Num + Signed {}

/// Floating scalars for the eigen kernels: f32 or f64.
pub trait Real: Float + FromPrimitive + Debug + Send + Sync {
    /// Absolute floor for tolerances that are pinned in binary64 terms.
    /// Never below a small multiple of machine epsilon.
    fn tolerance_floor(pinned: f64) -> Self {
        let pinned = Self::from_f64(pinned).unwrap();
        let eps = Self::epsilon() * Self::from_f64(16.0).unwrap();
        if pinned > eps {
            pinned
        } else {
            eps
        }
    }
}

impl Real for f32 {}
impl Real for f64 {}
