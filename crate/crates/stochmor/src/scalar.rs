//! Scalar abstraction: every algorithm in this crate is generic over the
//! floating-point type through [`Scalar`].

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};

/// Floating-point scalar usable by all numerics in this crate: `f32` or `f64`.
///
/// `RealField` supplies the field operations and elementary functions;
/// the `num-traits` casts move constants and diagnostics across types.
pub trait Scalar: RealField + FromPrimitive + ToPrimitive + Copy + Send + Sync {}

impl<T> Scalar for T where T: RealField + FromPrimitive + ToPrimitive + Copy + Send + Sync {}

/// Lift an `f64` constant into the working scalar type.
#[inline]
pub fn real<S: Scalar>(x: f64) -> S {
    S::from_f64(x).expect("constant not representable in scalar type")
}

/// Lower a scalar to `f64` for diagnostics and error messages.
#[inline]
pub fn to_f64<S: Scalar>(x: S) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
