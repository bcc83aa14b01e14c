use std::fmt::Debug;
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Scalar type the whole crate is generic over. Implemented for `f32` and `f64`.
///
/// Coefficient tables and tolerances are tuned for `f64`; `f32` works but the
/// documented accuracy targets only hold for `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + Sum
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Send
    + Sync
    + 'static
{
    /// Shorthand for converting an `f64` constant, panicking only on types
    /// that cannot represent ordinary finite values (none of ours).
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant must convert")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("Real must convert to f64")
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + Sum
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Debug
        + Send
        + Sync
        + 'static
{
}
