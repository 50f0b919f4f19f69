use thiserror::Error;

/// Errors produced by kernel construction, assembly, and solves.
#[derive(Debug, Error)]
pub enum Error {
    /// A fractional operator spec violates its domain constraints.
    #[error("invalid operator spec: {0}")]
    InvalidSpec(String),

    /// A caller broke a documented precondition (wrong sample count,
    /// non-orthogonal rotation, plastic update on an elastic state, ...).
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// Run configuration is inconsistent (grid/spec mismatch, bad bounds).
    #[error("configuration error: {0}")]
    Config(String),

    /// A matrix that must be invertible is singular.
    #[error("singular tensor: {0}")]
    SingularTensor(String),

    /// Banded elimination hit a vanishing pivot.
    #[error("singular system: zero pivot at node {node}")]
    SingularSystem { node: usize },

    /// Direct solve finished but the residual check failed.
    #[error("solver residual too large: |A x - b| = {residual:.3e} exceeds {limit:.3e}")]
    Residual { residual: f64, limit: f64 },

    /// Error raised while marching the load program; wraps the step index.
    #[error("load step {step}: {source}")]
    AtStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_step(self, step: usize) -> Error {
        Error::AtStep {
            step,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
