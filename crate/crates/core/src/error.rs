use thiserror::Error;

/// Errors raised by the engines.
///
/// Variants fall into three classes that the command-line front end maps to
/// exit codes: bad input, inconclusive fits, and violated invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("colon by the zero ideal is undefined")]
    ZeroColon,
    #[error("{0} is undefined for the zero or unit ideal")]
    Degenerate(&'static str),
    #[error("ideal is not primary to the maximal ideal: {0}")]
    NotPrimary(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid grading: {0}")]
    Grading(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("fitted polynomial disagrees with the table at {point:?}")]
    Unstable { point: Vec<u32> },
    #[error("no stable region found below box side {cap}; last mismatch at {point:?}")]
    Inconclusive { cap: u32, point: Vec<u32> },
    #[error("fit corruption: {0}")]
    FitCorruption(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Inconclusive,
    Invariant,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Inconclusive { .. } | Error::Unstable { .. } => ErrorClass::Inconclusive,
            Error::FitCorruption(_) | Error::Invariant(_) => ErrorClass::Invariant,
            _ => ErrorClass::Input,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
