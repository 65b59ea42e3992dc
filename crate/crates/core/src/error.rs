use core::fmt;

/// Errors raised by the numerical routines and the claim harness.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two operands have different dimensions.
    DimensionMismatch { left: usize, right: usize },
    /// Input is not a square `n × n` array with `n ≥ 1`.
    NotSquare,
    /// A NaN or infinite entry was supplied.
    NonFinite,
    /// A zero vector cannot be normalized onto the unit sphere.
    ZeroVector,
    /// The eigensolver was handed a matrix that is not Hermitian.
    NotHermitian { deviation: f64 },
    /// The Jacobi eigensolver exhausted its sweep budget.
    NoConvergence { sweeps: usize, off_diagonal: f64 },
    /// An argument violates an operation's precondition.
    InvalidArgument(&'static str),
    /// The claim identifier is not registered.
    UnknownClaim,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NotSquare => f.write_str("matrix must be square with dimension at least 1"),
            Error::NonFinite => f.write_str("non-finite entry"),
            Error::ZeroVector => f.write_str("cannot normalize the zero vector"),
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (max |H - H*| = {deviation:e})")
            }
            Error::NoConvergence { sweeps, off_diagonal } => write!(
                f,
                "Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off_diagonal:e})"
            ),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::UnknownClaim => f.write_str("unknown claim identifier"),
        }
    }
}

impl core::error::Error for Error {}
