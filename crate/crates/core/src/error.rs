use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("attempted to invert zero")]
    ZeroInverse,
    #[error("operands belong to different fields or rings")]
    SpecMismatch,
    #[error("the multiplicative order of zero is undefined")]
    ZeroOrder,
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    NotIrreducible(usize),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("element is not a unit of the ring")]
    NotAUnit,
    #[error("internal invariant violated: {0}")]
    InternalError(String),
    #[error("closed-form idempotents are not primitive: {0}")]
    ConditionNotMet(String),
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coefficients are not all in the base field")]
    CoefficientsNotInBaseField,
    #[error("not a linear permutation")]
    NotAPermutation,
    #[error("binomial coefficients must be nonzero")]
    ZeroCoefficient,
    #[error("the set of shifts must contain 0")]
    ZeroNotInA,
    #[error("the shift element must be nonzero")]
    ZeroAlpha,
    #[error("hypothesis violated: {}", .0.join("; "))]
    HypothesisViolated(Vec<String>),
    #[error("shift order (q-1)n = {0} is odd")]
    OddOrder(u64),
    #[error("enumeration of {size} elements exceeds the cap of {cap}")]
    TooLarge { size: String, cap: u64 },
    #[error("base element is not primitive")]
    NotPrimitive,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroInverse => "ZeroInverse",
            Error::SpecMismatch => "SpecMismatch",
            Error::ZeroOrder => "ZeroOrder",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::NotPrime(_) => "NotPrime",
            Error::NotIrreducible(_) => "NotIrreducible",
            Error::BadInput(_) => "BadInput",
            Error::BothZero => "BothZero",
            Error::NotAUnit => "NotAUnit",
            Error::InternalError(_) => "InternalError",
            Error::ConditionNotMet(_) => "ConditionNotMet",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::CoefficientsNotInBaseField => "CoefficientsNotInBaseField",
            Error::NotAPermutation => "NotAPermutation",
            Error::ZeroCoefficient => "ZeroCoefficient",
            Error::ZeroNotInA => "ZeroNotInA",
            Error::ZeroAlpha => "ZeroAlpha",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::OddOrder(_) => "OddOrder",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotPrimitive => "NotPrimitive",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
