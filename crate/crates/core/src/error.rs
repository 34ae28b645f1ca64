use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("incomparable totals: {left} vs {right}")]
    IncomparableTotals { left: usize, right: usize },

    #[error("not a horizontal strip at part {index}: beta={beta_part}, gamma={gamma_part}")]
    NotHorizontalStrip {
        /// 1-based part index.
        index: usize,
        beta_part: usize,
        gamma_part: usize,
    },

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("different ambient variety: ({0},{1}) vs ({2},{3})")]
    DifferentAmbient(usize, usize, usize, usize),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("invalid module representation: {0}")]
    InvalidRep(String),

    #[error(
        "solution space too large: {dim} free coordinates over F_{p} exceeds {limit_bits} bits"
    )]
    SizeGuard { dim: usize, p: u32, limit_bits: u32 },
}
