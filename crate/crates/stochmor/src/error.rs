//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {found}")]
    Dimension {
        context: &'static str,
        expected: String,
        found: String,
    },

    #[error("matrix `{name}` is not symmetric (deviation {deviation:e})")]
    NotSymmetric { name: &'static str, deviation: f64 },

    #[error("matrix `{name}` is not positive semidefinite (min eigenvalue {min_eigenvalue:e}, tolerance {tolerance:e})")]
    NotPositiveSemidefinite {
        name: &'static str,
        min_eigenvalue: f64,
        tolerance: f64,
    },

    #[error("non-finite entry in `{name}`")]
    NonFinite { name: &'static str },

    #[error("eigenvalue {value:e} is negative beyond tolerance {tolerance:e}; fractional power undefined")]
    NegativeEigenvalue { value: f64, tolerance: f64 },

    #[error("quadrature did not converge: {context}")]
    QuadratureNonConvergence { context: String },

    #[error("Kronecker dimension n^2 = {needed} exceeds cap {cap}; use a matrix-free path")]
    KroneckerCapExceeded { needed: usize, cap: usize },

    #[error("singular operator: near-zero pivot {pivot:e} against largest {largest:e}")]
    SingularOperator { pivot: f64, largest: f64 },

    #[error("eigenvalue collision: lambda_i + lambda_j = {sum:e} is too close to zero for a Lyapunov solve")]
    EigenvalueCollision { sum: f64 },

    #[error("stationary iteration did not converge after {iterations} iterations (residual history: {history:?})")]
    IterationNonConvergence {
        iterations: usize,
        history: Vec<f64>,
    },

    #[error("stationary iteration diverged (residual history: {history:?})")]
    IterationDiverged { history: Vec<f64> },

    #[error("exponential series did not converge at order {max_order} with {substeps} sub-steps; retry with smaller sub-steps")]
    SeriesNonConvergence { max_order: usize, substeps: usize },

    #[error("exponential sub-stepping exceeded {max_substeps} sub-steps without meeting tolerance {tolerance:e}")]
    SubstepLimit { max_substeps: usize, tolerance: f64 },

    #[error("simulated path blew up at step {step} (step size {step_size:e})")]
    PathBlowUp { step: usize, step_size: f64 },

    #[error("numerical rank deficiency: {deficient} of {total} values below {threshold:e}")]
    RankDeficient {
        deficient: usize,
        total: usize,
        threshold: f64,
    },

    #[error("error bound eps^2 = {value:e} is negative beyond rounding scale {scale:e}; inputs inconsistent")]
    NegativeBound { value: f64, scale: f64 },

    #[error("Schur decomposition did not converge")]
    SchurFailure,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
