use alloc::string::String;
use core::fmt;

/// Errors produced by the code-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two vectors of different lengths were combined.
    LengthMismatch { left: usize, right: usize },
    /// A vector or matrix digit was outside {0,1,2,3}.
    InvalidDigit { row: usize, col: usize, digit: char },
    /// A matrix had no rows or columns.
    EmptyMatrix,
    /// Row reduction found no pivot: the matrix generates the zero code.
    ZeroMatrix,
    /// An operation required a self-orthogonal input.
    NotSelfOrthogonal,
    /// An operation required a doubly-even binary input.
    NotDoublyEven,
    /// `complement_in_dual` was called with B not contained in A's dual.
    NotInDual,
    /// Binary rows were linearly dependent where independence was required.
    DependentRows,
    /// The lift congruences are unsatisfiable for these rows.
    UnsatisfiableLift { row_i: usize, row_j: usize },
    /// Wrong expansion routine for this code's type.
    WrongType(&'static str),
    /// A requested residue dimension exceeds the n/2 (or (n-1)/2) bound.
    ResidueDimensionTooLarge { requested: usize, bound: usize },
    /// No doubly-even supercode of the requested dimension exists.
    NoSupercode { dim: usize },
    /// The code has too many codewords to enumerate (2^k for k > 63).
    TooManyCodewords { log2: usize },
    /// The weight report was capped below a weight the operation needs.
    CappedBelow { cap: u64, needed: u64 },
    /// Euclidean minimum distance is not divisible by 4, so the lattice
    /// minimum norm is not an integer.
    FractionalNorm { d_e: u64 },
    /// Brute-force lattice enumeration radius too small to be exhaustive.
    RadiusTooSmall { radius: i64, norm: u64 },
    /// Permutation-equivalence search refused: length above the supported bound.
    LengthAboveEquivalenceBound { n: usize, max: usize },
    /// Unknown catalog entry name.
    UnknownCatalogEntry(String),
    /// A parameter was out of range for the requested construction.
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { left, right } => {
                write!(f, "vector length mismatch: {left} vs {right}")
            }
            Error::InvalidDigit { row, col, digit } => {
                write!(f, "invalid Z4 digit {digit:?} at row {row}, column {col}")
            }
            Error::EmptyMatrix => write!(f, "matrix has no rows or columns"),
            Error::ZeroMatrix => write!(f, "matrix generates the zero code (no pivot)"),
            Error::NotSelfOrthogonal => write!(f, "code is not self-orthogonal"),
            Error::NotDoublyEven => write!(f, "binary code is not doubly-even"),
            Error::NotInDual => write!(f, "code B is not contained in the dual of A"),
            Error::DependentRows => write!(f, "rows are linearly dependent"),
            Error::UnsatisfiableLift { row_i, row_j } => write!(
                f,
                "lift congruence unsatisfiable for rows {row_i}, {row_j} \
                 (binary reduction is not doubly-even self-orthogonal)"
            ),
            Error::WrongType(which) => write!(f, "{which}"),
            Error::ResidueDimensionTooLarge { requested, bound } => {
                write!(f, "requested residue dimension {requested} exceeds the bound {bound}")
            }
            Error::NoSupercode { dim } => {
                write!(f, "no doubly-even supercode of dimension {dim} exists")
            }
            Error::TooManyCodewords { log2 } => {
                write!(f, "code has 2^{log2} codewords; enumeration supports up to 2^63")
            }
            Error::CappedBelow { cap, needed } => {
                write!(f, "weight report capped at {cap} but weights up to {needed} are required")
            }
            Error::FractionalNorm { d_e } => write!(
                f,
                "minimum Euclidean weight {d_e} is not divisible by 4; \
                 lattice minimum norm would not be an integer"
            ),
            Error::RadiusTooSmall { radius, norm } => write!(
                f,
                "radius {radius} is not exhaustive for norm {norm} (need (radius+1)^2 > 4*norm)"
            ),
            Error::LengthAboveEquivalenceBound { n, max } => {
                write!(f, "permutation equivalence supported only for n <= {max}, got n = {n}")
            }
            Error::UnknownCatalogEntry(name) => write!(f, "unknown catalog entry {name:?}"),
            Error::InvalidParameter(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for Error {}
