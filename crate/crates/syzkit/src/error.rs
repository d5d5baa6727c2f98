use thiserror::Error;

/// Errors shared across the whole toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not an odd prime below 2^62")]
    NotAPrime(u64),
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("polynomial mixes degrees {0} and {1}")]
    InhomogeneousError(usize, usize),
    #[error("unknown variable x{0} (ring has variables x0..x{1})")]
    UnknownVariable(usize, usize),
    #[error("operands belong to different rings")]
    ContextMismatch,
    #[error("coordinate vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("matrix of {rows}x{cols} entries exceeds the size guard ({guard}); set SYZKIT_SIZE_GUARD to override")]
    ComputationTooLarge {
        rows: usize,
        cols: usize,
        guard: usize,
    },
    #[error("polynomial is not a quadric in the ideal")]
    NotAQuadricInIdeal,
    #[error("second ideal is not contained in the first in degree 2")]
    NotASubideal,
    #[error("matrix is not skew-symmetric with linear entries")]
    NotSkew,
    #[error("resampling budget exhausted after {0} seeds")]
    GenerationFailed(u32),
    #[error("generator {0} vanishes identically at t = {1}")]
    SpecializationError(usize, String),
    #[error("{msg}{}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
    FileFormat { line: Option<usize>, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
