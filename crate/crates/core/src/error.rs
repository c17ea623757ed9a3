use std::fmt;

/// Errors reported by the library.
///
/// Shape and index misuse inside pure matrix arithmetic is treated as a
/// programming error and panics; the variants here cover the failure modes
/// that callers are expected to handle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The pair (n, mu) does not describe an admissible Type-II block:
    /// n must be >= 1 and mu must satisfy 0 != mu != (-1)^(n+1).
    InvalidCanonicalParameter { n: usize, mu: String },
    /// A parameter vector has the wrong length for the basis it addresses.
    ParamCountMismatch { expected: usize, got: usize },
    /// Two matrices that must share a shape do not.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A square matrix was required.
    NonSquareInput { rows: usize, cols: usize },
    /// The input exceeds the configured size cap for exact kernel computation.
    SizeLimit { size: usize, limit: usize },
    /// A bracket of two basis elements left the span of the basis.
    NotClosed { i: usize, j: usize },
    /// The supplied basis is linearly dependent.
    DependentBasis,
    /// Matrix inversion was attempted on a singular matrix.
    Singular,
    /// Division by the zero scalar.
    DivisionByZero,
    /// An index argument fell outside its documented range.
    OutOfRange {
        what: &'static str,
        got: usize,
        max: usize,
    },
    /// A scalar, matrix, or JSON document failed to parse.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidCanonicalParameter { n, mu } => write!(
                f,
                "invalid canonical parameters n={n}, mu={mu}: a Type-II block requires 0 != mu != (-1)^(n+1)"
            ),
            Error::ParamCountMismatch { expected, got } => {
                write!(f, "expected {expected} parameters, got {got}")
            }
            Error::ShapeMismatch { left, right } => write!(
                f,
                "shape mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NonSquareInput { rows, cols } => {
                write!(f, "square matrix required, got {rows}x{cols}")
            }
            Error::SizeLimit { size, limit } => write!(
                f,
                "input is {size}x{size} but the exact kernel solver is capped at {limit}x{limit}"
            ),
            Error::NotClosed { i, j } => write!(
                f,
                "bracket of basis elements {i} and {j} lies outside the span of the basis"
            ),
            Error::DependentBasis => write!(f, "basis elements are linearly dependent"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::OutOfRange { what, got, max } => {
                write!(f, "{what} = {got} is out of range (max {max})")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
