use thiserror::Error;

/// Errors produced while constructing or analyzing finite structures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{what} has size {actual}, which exceeds the cap {cap} (raise with {flag})")]
    Capacity {
        what: &'static str,
        actual: usize,
        cap: usize,
        flag: &'static str,
    },

    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("table size mismatch: {0}")]
    Structure(String),

    #[error("tables are not genuine residuals: adjunction fails at ({u}, {v}, {w})")]
    InconsistentAlgebra { u: usize, v: usize, w: usize },

    #[error("carrier lattice is not distributive (witness a={a}, b={b}, c={c})")]
    NotDistributive { a: usize, b: usize, c: usize },

    #[error("no two-sided product unit exists; the residuated-lattice signature needs one")]
    NoUnit,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
