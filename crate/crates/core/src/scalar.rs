use num_traits::{Float, FromPrimitive};

/// Floating-point element type of tensors and network parameters.
///
/// Training and inference run on `f32`; gradient-check tests instantiate the
/// same code with `f64` so that central finite differences resolve to the
/// required precision.
pub trait Scalar:
    Float + FromPrimitive + std::iter::Sum + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    fn from_f64(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("finite f64 converts to scalar")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
