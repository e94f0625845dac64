use thiserror::Error;

/// Errors reported by the library. Relation violations are never errors;
/// they are data carried by [`crate::report::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} index {index} out of range 1..={bound}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("dimension mismatch in {op}: {lhs_rows}x{lhs_cols} vs {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// Column `col` has support off the diagonal, so it is not an
    /// eigencolumn. Distinct from an out-of-range column index.
    #[error("column {col} is not an eigencolumn")]
    NotEigencolumn { col: usize },

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("invalid scalar: {0}")]
    InvalidScalar(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid Gelfand-Zetlin pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("signature {sig} does not match representation ambient gl({m}|{n})")]
    SignatureMismatch { sig: String, m: usize, n: usize },

    #[error("({i},{j}) is not a Chevalley generator index pair")]
    NonChevalleyGenerator { i: usize, j: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
