use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("{what} {value} out of range (limit {limit})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {0} vertices; the solver supports at most 128")]
    TooLarge(usize),
    #[error("path pool exceeds the cap of {0} paths")]
    PoolBudget(usize),
    #[error("no base cover for {family} {key:?}")]
    UnknownKey { family: &'static str, key: Vec<usize> },
    #[error("formula conflict for sizes {sizes:?}: dominant-part gives {dominant}, many-odd gives {many_odd}")]
    FormulaConflict {
        sizes: Vec<usize>,
        dominant: usize,
        many_odd: usize,
    },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
