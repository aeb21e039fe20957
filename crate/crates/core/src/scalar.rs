//! Scalar abstraction shared by every numerical routine in the crate.
//!
//! All evaluation paths are written once against [`Scalar`] and instantiated
//! for `f32`, `f64` and the double-double [`DoubleDouble`]. The double-double
//! instantiation is what the verification suites use where an inequality
//! degenerates faster than `f64` can resolve (the envelope lower bounds
//! touch `E(r)` at order `r^8` as `r -> 0`).

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use crate::dd::DoubleDouble;

/// Real scalar usable by the elliptic, mean and bound routines.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Unit roundoff of the representation (half an ulp at 1).
    fn roundoff() -> Self;

    /// Conversion from an `f64` literal.
    fn lit(x: f64) -> Self;

    /// Lossy conversion to `f64` for reporting.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    #[inline]
    fn lit(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn roundoff() -> Self {
        f32::EPSILON / 2.0
    }
}

impl Scalar for f64 {
    #[inline]
    fn lit(x: f64) -> Self {
        x
    }

    #[inline]
    fn roundoff() -> Self {
        f64::EPSILON / 2.0
    }
}

impl Scalar for DoubleDouble {
    #[inline]
    fn lit(x: f64) -> Self {
        DoubleDouble::from(x)
    }

    #[inline]
    fn roundoff() -> Self {
        DoubleDouble::from(2f64.powi(-104))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundoff_ordering() {
        assert!(f64::from(f32::roundoff()) > f64::roundoff());
        assert!(DoubleDouble::roundoff().hi() < f64::roundoff() * 1e-15);
    }

    #[test]
    fn literal_round_trip() {
        assert_eq!(f64::lit(0.25), 0.25);
        assert_eq!(DoubleDouble::lit(0.25).as_f64(), 0.25);
        assert_eq!(f32::lit(0.5), 0.5f32);
    }
}
