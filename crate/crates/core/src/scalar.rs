//! Scalar abstraction shared by the response, optics and oracle modules.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar the physics is generic over (f32 or f64).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an f64 literal. Every supported scalar can represent the
    /// constants used in this crate, so this never fails.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::lit(0.5)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over a [`Real`] scalar.
pub type Cplx<T> = Complex<T>;

#[inline]
pub(crate) fn re<T: Real>(x: T) -> Cplx<T> {
    Complex::new(x, T::zero())
}

#[inline]
pub(crate) fn i_unit<T: Real>() -> Cplx<T> {
    Complex::new(T::zero(), T::one())
}

/// Relative distance `|a - b| / |b|`, falling back to the absolute
/// distance when `b` is exactly zero.
pub fn rel_err<T: Real>(a: Cplx<T>, b: Cplx<T>) -> T {
    let d = (a - b).norm();
    let scale = b.norm();
    if scale == T::zero() {
        d
    } else {
        d / scale
    }
}
