//! Scalar abstraction: the whole engine is generic over the floating-point
//! type, with `f64` as the precision the CLI and harness run at.

use core::fmt::{Debug, Display};
use core::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

/// Floating-point scalar (`f32` or `f64`) the engine computes in.
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` constant into `Self` (rounding for `f32`).
    fn of(v: f64) -> Self {
        num_traits::FromPrimitive::from_f64(v).expect("f64 constant not representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
