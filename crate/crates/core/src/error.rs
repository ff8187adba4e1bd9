use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma pole at non-positive integer {0}")]
    Pole(f64),

    #[error("hypergeometric parameter c = {0} is a pole before the series terminates")]
    ParameterPole(f64),

    #[error("series did not converge: {0}")]
    NoConvergence(String),

    #[error("invalid index: {0}")]
    Index(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("evaluation point too close to a singular point: {0}")]
    SingularPoint(String),

    #[error("angle relation hits a branch point: {0}")]
    BranchPoint(String),

    #[error("angle extraction is degenerate: {0}")]
    DegenerateExtraction(String),

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
