//! Floating-point scalar abstraction.
//!
//! Everything in this crate is generic over a [`Scalar`] so the same code
//! runs in `f32` or `f64`. The concrete aliases at the crate root fix the
//! scalar to `f64`, which is what the validation suite targets; `f32` works
//! throughout with correspondingly looser accuracy.

use std::fmt::{Debug, Display, LowerExp};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar type for dynamics and indicator computations.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Bring an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("constant not representable in scalar type")
}

/// Best-effort `f64` view of a scalar, for error reporting.
#[inline]
pub(crate) fn to64<T: Scalar>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_convert_to_both_widths() {
        assert_eq!(lit::<f64>(0.25), 0.25);
        assert_eq!(lit::<f32>(0.25), 0.25_f32);
    }

    #[test]
    fn f64_round_trips_through_to64() {
        assert_eq!(to64(1.5_f64), 1.5);
        assert_eq!(to64(1.5_f32), 1.5);
    }
}
