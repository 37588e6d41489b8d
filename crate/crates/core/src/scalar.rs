use num_traits::{Float, FromPrimitive};

/// Floating-point scalar for probability math: `f32` or `f64`.
///
/// The discrete cat-state algebra is exact and does not use this trait; it is
/// the dense statevector oracle, the closed-form detection probabilities and
/// the Monte Carlo summaries that are generic over the scalar.
pub trait Real: Float + FromPrimitive + core::fmt::Debug + Send + Sync + 'static {}

impl Real for f32 {}
impl Real for f64 {}
