use core::fmt;

/// Errors raised by the algebraic core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The matrix is not a symmetrizable generalized Cartan matrix.
    InvalidGcm(&'static str),
    /// A node index was outside `0..n`.
    IndexOutOfRange { index: usize, rank: usize },
    /// A weight or coroot has the wrong number of coordinates.
    DimensionMismatch { expected: usize, found: usize },
    /// The coordinate vector is not a real coroot.
    NotRealCoroot,
    /// The weight is required to be dominant.
    NotDominant,
    /// The word is not a reduced word.
    NotReduced,
    /// A documented precondition of the operation does not hold.
    Precondition(&'static str),
    /// A BFS layer exceeded the configured size cap.
    LayerCapExceeded { length: usize, size: usize, cap: usize },
    /// Oracle search bound does not contain any candidate.
    SearchBoundTooSmall,
    /// Enumeration would exceed a hard size limit.
    TooLarge(&'static str),
    /// Parse failure for textual input.
    Parse(&'static str),
    /// An internal consistency check failed; this indicates a bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGcm(why) => write!(f, "invalid generalized Cartan matrix: {why}"),
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "node index {index} out of range for rank {rank}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotRealCoroot => write!(f, "not a real coroot"),
            Error::NotDominant => write!(f, "weight is not dominant"),
            Error::NotReduced => write!(f, "word is not reduced"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::LayerCapExceeded { length, size, cap } => write!(
                f,
                "Weyl group layer of length {length} has {size} elements, exceeding the cap {cap}"
            ),
            Error::SearchBoundTooSmall => write!(f, "search bound contains no candidate"),
            Error::TooLarge(what) => write!(f, "enumeration too large: {what}"),
            Error::Parse(what) => write!(f, "parse error: {what}"),
            Error::Internal(what) => write!(f, "internal error: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
