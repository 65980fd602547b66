use thiserror::Error;

/// Errors reported by the library.
///
/// `NoCodewordInRange` is a decoding outcome rather than a fault; callers that
/// need to distinguish the two can use [`Error::is_decode_failure`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("modulus must be monic of degree {expected}, got {found} coefficients")]
    InvalidModulus { expected: usize, found: usize },
    #[error("field of order {p}^{m} exceeds the 2^16 cap")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("value {value} is not a canonical element of a field of order {order}")]
    ValueOutOfRange { value: u64, order: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("evaluation points are not pairwise distinct")]
    DuplicateNodes,
    #[error("message degree {degree} is not below k = {k}")]
    MessageDegreeTooHigh { degree: usize, k: usize },
    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("result would exceed y-degree bound {bound}")]
    YDegreeOverflow { bound: usize },
    #[error("generator {index} has y-degree {found:?}, expected {index}")]
    MalformedInput { index: usize, found: Option<usize> },
    #[error("generator {0} vanished during reduction")]
    UnexpectedZero(usize),
    #[error("weighted order needs k >= 2, got k = {0}")]
    KTooSmall(usize),
    #[error("y-degree bound {l} is below multiplicity {m}")]
    LOverrideBelowM { l: usize, m: usize },
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("no codeword within the unique decoding radius")]
    NoCodewordInRange,
    #[error("error weight {weight} exceeds the unique decoding radius {tau}")]
    TooManyErrors { weight: usize, tau: usize },
    #[error("instance too large for exhaustive search: {0}")]
    InstanceTooLarge(String),
}

impl Error {
    pub fn is_decode_failure(&self) -> bool {
        matches!(self, Error::NoCodewordInRange)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
