//! Real scalar abstraction for the spectral routines.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating point type the eigensolvers run in: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Default eigen-residual tolerance (∞-norm).
    fn default_tolerance() -> Self;

    /// Gap below which two eigenvalues are reported as coincident.
    fn multiplicity_gap() -> Self;

    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite constant")
    }

    #[inline]
    fn count(n: usize) -> Self {
        Self::from_usize(n).expect("representable count")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn default_tolerance() -> Self {
        1e-8
    }

    fn multiplicity_gap() -> Self {
        1e-6
    }
}

impl Scalar for f32 {
    fn default_tolerance() -> Self {
        2e-3
    }

    fn multiplicity_gap() -> Self {
        1e-3
    }
}
