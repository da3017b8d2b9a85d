use core::fmt;

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Checked integer arithmetic left the `i64` range.
    Overflow,
    /// A coordinate vector does not have the field's degree.
    DimensionMismatch { expected: usize, found: usize },
    /// Two objects that must live over the same field do not.
    FieldMismatch,
    /// The multiplication table does not describe a commutative ring with
    /// identity in basis position 0.
    InvalidTable(String),
    /// `d` is zero, one, or not squarefree.
    InvalidDiscriminant(i64),
    /// All generators were zero.
    ZeroIdeal,
    /// The unit ideal was given where a proper ideal is required.
    UnitIdeal,
    /// A quotient ring would need more residues than the configured cap.
    EnumerationCap { needed: u64, cap: u64 },
    /// A norm has a prime factor beyond the trial-division bound.
    TrialDivisionBound { norm: u64, bound: u64 },
    /// Prime decomposition could not be certified for this field and prime.
    UnsupportedPrime { p: u64, reason: String },
    /// The argument is not a rational prime.
    NotPrime(u64),
    /// An index into a system or partition is out of range.
    IndexOutOfRange { index: usize, len: usize },
    /// The modulus of a class does not divide the ambient modulus.
    NotADivisor,
    /// A covering system must have at least one class.
    EmptySystem,
    /// The operation requires an exact covering system.
    NotExact,
    /// The operation requires a division-maximal modulus.
    NotDivisionMaximal(usize),
    /// Some other precondition failed.
    Precondition(String),
    /// An internal consistency check failed.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => write!(f, "integer overflow"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected {expected} coordinates, found {found}")
            }
            Error::FieldMismatch => write!(f, "objects belong to different number fields"),
            Error::InvalidTable(msg) => write!(f, "invalid multiplication table: {msg}"),
            Error::InvalidDiscriminant(d) => {
                write!(f, "{d} is not a squarefree integer other than 0 and 1")
            }
            Error::ZeroIdeal => write!(f, "all generators are zero"),
            Error::UnitIdeal => write!(f, "the unit ideal is not a valid modulus here"),
            Error::EnumerationCap { needed, cap } => {
                write!(f, "quotient has {needed} residues, above the cap of {cap}")
            }
            Error::TrialDivisionBound { norm, bound } => {
                write!(f, "norm {norm} has a prime factor above the trial-division bound {bound}")
            }
            Error::UnsupportedPrime { p, reason } => {
                write!(f, "cannot decompose {p} in this field: {reason}")
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::NotADivisor => write!(f, "modulus does not divide the ambient modulus"),
            Error::EmptySystem => write!(f, "a covering system needs at least one class"),
            Error::NotExact => write!(f, "system is not an exact covering"),
            Error::NotDivisionMaximal(i) => write!(f, "modulus of class {i} is not division maximal"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    /// True for errors caused by a configured resource limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::EnumerationCap { .. } | Error::TrialDivisionBound { .. } | Error::Overflow)
    }
}
