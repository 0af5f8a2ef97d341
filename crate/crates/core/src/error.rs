use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported plane order {0}: need a prime power q <= 16")]
    UnsupportedOrder(u64),

    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),

    #[error("coloring is not a plane witness: {0}")]
    NotAPlaneWitness(String),

    #[error("no witness available for t={t}: missing base coloring of order {needed}")]
    WitnessUnavailable { t: usize, needed: usize },

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
        Error::Malformed(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
