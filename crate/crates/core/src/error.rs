use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count {0} out of range (supported: {1})")]
    QubitCount(usize, &'static str),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("truth table has {got} entries, expected {expected}")]
    TruthTableLength { got: usize, expected: usize },

    #[error("truth table value {0} does not fit in {1} bits")]
    TruthTableValue(u64, usize),

    #[error("function is neither constant nor balanced")]
    NeitherConstantNorBalanced,

    #[error("invalid qubit subset: {0}")]
    InvalidSubset(String),

    #[error("unknown spin {0}")]
    UnknownSpin(usize),

    #[error("no coupling between spins {0} and {1}")]
    MissingCoupling(usize, usize),

    #[error("invalid spin system: {0}")]
    InvalidSpinSystem(String),

    #[error("negative delay {0} s")]
    NegativeDelay(f64),

    #[error("angle {0} rad outside (-2π, 2π]")]
    AngleOutOfRange(f64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported function: {0}")]
    UnsupportedFunction(String),

    #[error("unknown function name {0:?}")]
    UnknownFunctionName(String),

    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
