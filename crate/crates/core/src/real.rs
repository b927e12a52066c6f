//! Scalar abstraction: the library is generic over the floating-point type.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps, ToPrimitive};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Floating-point scalar (`f32` or `f64`) the numerical kernels work over.
///
/// The stated accuracy targets of this crate assume `f64`; `f32` instantiations
/// compile and run but saturate around single precision.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` constant into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant must be representable")
    }

    /// Lossy view as `f64`, for diagnostics and reports.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + NumAssignOps
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
