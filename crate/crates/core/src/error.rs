use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power >= 2")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of order {0} is too large for table-driven arithmetic")]
    FieldTooLarge(u128),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial {0} is not monic")]
    NotMonic(String),
    #[error("polynomial {0} is not irreducible")]
    NotIrreducible(String),
    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(i64),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Upsilon({n},{m}) needs {required} candidate tuples, budget is {budget}")]
    BudgetExceeded {
        n: u32,
        m: u32,
        required: u128,
        budget: u128,
    },
    #[error("window {window} is smaller than the degree {d}")]
    WindowTooSmall { window: u32, d: u32 },
    #[error("integer overflow evaluating {0}")]
    Overflow(&'static str),
    #[error("{0}")]
    OutOfCase(String),
    #[error("double cover requires even degree, got d = {0}")]
    OddDegreeCover(u32),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
