//! Time-limited Gramian-based model order reduction for controlled linear
//! stochastic differential equations with multiplicative noise,
//!
//! ```text
//! dx(t) = [A x(t) + B u(t)] dt + sum_i N_i x(t) dw_i(t),      y(t) = C x(t),
//! ```
//!
//! where `w` is a q-dimensional Wiener process with covariance `K t`. No
//! stability assumption is placed on `A` or on the noise, so all Gramians are
//! restricted to a finite horizon `[0, T]`.
//!
//! The crate is organized along the pipeline:
//!
//! * [`sysmodel`] — the system data model and a spectrally discretized
//!   stochastic heat-equation benchmark on `[0, pi]^2`;
//! * [`lyap`] — generalized Lyapunov operators, their Kronecker matrix
//!   representation, and direct/iterative solvers;
//! * [`covflow`] — matrix-free propagation of the covariance flow to obtain
//!   terminal covariances (including the coupled full/reduced flow);
//! * [`gramians`] — time-limited Gramians by three strategies: exact,
//!   sampled with a control-variate correction, and deterministic
//!   approximation;
//! * [`reduce`] — modal and balancing transformations plus truncation;
//! * [`errbound`] — the a-posteriori output error bound and its
//!   singular-value decomposition form, cross-checked against each other;
//! * [`mcsim`] — reproducible Monte-Carlo simulation of the full and reduced
//!   systems under common noise;
//! * [`io`] — the plain-text `STOCHLIN`/`MATRIX` file formats and CSV output.
//!
//! All numerics are generic over the floating-point scalar via [`Scalar`];
//! concrete `f64`/`f32` aliases for the main types live at the crate root.

pub mod covflow;
pub mod errbound;
pub mod error;
pub mod gramians;
pub mod io;
pub mod linalg;
pub mod lyap;
pub mod mcsim;
pub mod reduce;
pub mod scalar;
pub mod sysmodel;

pub use error::{Error, Result};
pub use scalar::{real, Scalar};

/// Double-precision system; the default for the CLI and file formats.
pub type System64 = sysmodel::StochasticLinearSystem<f64>;
/// Single-precision system.
pub type System32 = sysmodel::StochasticLinearSystem<f32>;
/// Double-precision Gramian pair.
pub type GramianSet64 = gramians::GramianSet<f64>;
/// Double-precision balancing transform.
pub type BalancingTransform64 = reduce::BalancingTransform<f64>;
/// Double-precision reduced-order model.
pub type ReducedSystem64 = reduce::ReducedSystem<f64>;
/// Double-precision error-bound report.
pub type ErrorBoundReport64 = errbound::ErrorBoundReport<f64>;
