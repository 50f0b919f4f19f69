//! Library backing the `fracplast` binary: output writers, single-run and
//! sweep execution, and the verification battery.

pub mod output;
pub mod runner;
pub mod sweep;
pub mod verify;

use std::fmt;

/// Failure categories mapped onto process exit codes:
/// configuration errors exit 1, solver failures exit 2, verification
/// failures exit 3.
#[derive(Debug)]
pub enum Failure {
    Config(String),
    Solver(String),
    Verification(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Config(_) => 1,
            Failure::Solver(_) => 2,
            Failure::Verification(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Config(msg) => write!(f, "configuration error: {msg}"),
            Failure::Solver(msg) => write!(f, "solver failure: {msg}"),
            Failure::Verification(msg) => write!(f, "verification failure: {msg}"),
        }
    }
}

impl std::error::Error for Failure {}

fn classify(error: &fracplast::Error) -> Failure {
    use fracplast::Error;
    match error {
        Error::InvalidSpec(_) | Error::Config(_) | Error::ContractViolation(_) => {
            Failure::Config(error.to_string())
        }
        Error::SingularSystem { .. } | Error::Residual { .. } | Error::SingularTensor(_) => {
            Failure::Solver(error.to_string())
        }
        Error::AtStep { source, .. } => match classify(source) {
            Failure::Config(_) => Failure::Solver(error.to_string()),
            other => other,
        },
    }
}

impl From<fracplast::Error> for Failure {
    fn from(error: fracplast::Error) -> Self {
        classify(&error)
    }
}

impl From<std::io::Error> for Failure {
    fn from(error: std::io::Error) -> Self {
        Failure::Config(format!("i/o: {error}"))
    }
}
