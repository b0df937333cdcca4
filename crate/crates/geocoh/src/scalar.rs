use core::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Scalar type the whole crate is generic over.
///
/// `f64` and `f32` implement it out of the box. The blanket impl keeps the
/// bound open for any IEEE-like float that provides `num_traits::Float`.
pub trait Real: Float + FromPrimitive + Debug + Display + 'static {
    /// Converts an `f64` literal into the scalar type.
    ///
    /// Panics only if the target type cannot represent any approximation of
    /// the value, which cannot happen for finite literals and the supported
    /// float types.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    /// Clamps into `[lo, hi]`.
    #[inline]
    fn clamped(self, lo: Self, hi: Self) -> Self {
        self.max(lo).min(hi)
    }
}

impl<T> Real for T where T: Float + FromPrimitive + Debug + Display + 'static {}
