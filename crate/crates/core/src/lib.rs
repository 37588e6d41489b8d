//! Simulator and security-analysis toolkit for group-to-group quantum key
//! distribution built on multi-particle cat states.
//!
//! Two groups share one particle of an `n`-particle cat state per round,
//! measure in random `x`/`y` directions, and distill a shared bit per group
//! from announced basis counts and a masked parity collection. The crate
//! provides:
//!
//! - [`catstate`]: exact outcome statistics of the four cat states, the
//!   block decompositions, and an independent dense statevector oracle;
//! - [`protocol`]: the round/session engine for the original protocol and
//!   the chairperson variant, with announcement-ordering guarantees and
//!   line-delimited transcript serialization;
//! - [`adversary`]: intercept/resend and entangled-resend eavesdroppers,
//!   conspirator models, and misbehaving members;
//! - [`analysis`]: closed-form detection probabilities, test-count threshold
//!   solvers, and seeded parallel Monte Carlo estimation.

pub mod adversary;
pub mod analysis;
pub mod catstate;
pub mod exact;
pub mod protocol;
mod scalar;

pub use scalar::Real;

/// Default floating-point scalar used by the CLI and Monte Carlo paths.
pub type Scalar = f64;

/// Detection estimate at the default scalar.
pub type Estimate = analysis::DetectionEstimate<Scalar>;

/// Scenario parameters at the default scalar.
pub type Scenario = analysis::ScenarioParams<Scalar>;
