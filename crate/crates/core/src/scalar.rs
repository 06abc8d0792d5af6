//! Scalar abstraction over the floating-point element type.
//!
//! All numeric kernels are generic over [`Scalar`] so the same code runs in
//! f32 (production: parameters and activations) and f64 (gradient checking
//! and high-precision tests). Reductions accumulate in f64 regardless of the
//! element type.

use num_traits::{Float, FromPrimitive};

/// Floating-point element type of tensors, parameters and activations.
pub trait Scalar:
    Float
    + FromPrimitive
    + std::ops::AddAssign
    + std::ops::SubAssign
    + std::ops::MulAssign
    + std::fmt::Debug
    + std::fmt::Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts from f64, panicking only on values no float type can hold.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 value representable in scalar type")
    }

    /// Widens to f64 for accumulation.
    fn to64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
