use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("input is not a convex cycle: {0}")]
    NonConvexInput(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("reference point is not strictly inside the body")]
    ReferenceOutside,
    #[error("degenerate equilibrium configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("external robustness needs at least 3 stable points, found {0}")]
    TooFewStable(usize),
    #[error("no truncation in the searched family reduces the equilibrium count")]
    NoReductionFound,
    #[error("equilibrium set contains degenerate points")]
    DegeneratePresent,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
