//! Error type shared across the crate.
//!
//! Errors split into two classes, reflected in the CLI exit codes:
//! *usage* errors (malformed input: bad files, out-of-range codes, unknown
//! names — exit 2) and *domain* errors (well-formed requests that hit a
//! mathematical or resource limit — exit 1).

use crate::matrix::Mat;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus must be a monic polynomial of degree {expected}")]
    ModulusShape { expected: usize },
    #[error("modulus is reducible over the base field")]
    ReducibleModulus,
    #[error("field order {requested} exceeds the configured cap {cap}")]
    FieldOrderCap { requested: u128, cap: u64 },
    #[error("unsupported tower request: base field must be prime or the degree must be 1")]
    UnsupportedTower,
    #[error("element code {code} is out of range for a field of order {q}")]
    EltRange { code: u64, q: u64 },
    #[error("values belong to different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("the zero polynomial is not accepted here")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("index ({i}, {j}) is out of range for an {n}x{n} matrix (indices are 1-based)")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("message has length {got}, expected {expected}")]
    MessageLength { expected: usize, got: usize },
    #[error("not a codeword: the syndrome has {} nonzero entries", syndrome.hamming_weight())]
    NotACodeword { syndrome: Box<Mat> },
    #[error("received word differs from every codeword by more than a single error")]
    BeyondSingleError,
    #[error("enumeration budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("the Sylvester construction requires odd characteristic")]
    CharacteristicTwo,
    #[error("invalid adjacency matrix: {0}")]
    BadAdjacency(String),
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("the permutation does not commute with A")]
    NotCommuting,
    #[error("the permutation is not semiregular (it must be a non-identity permutation whose cycles all have the same length)")]
    NotSemiregular,
    #[error("argument {x} outside the domain {domain}")]
    Domain { x: f64, domain: String },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("environment variable {var} has invalid value {value:?}")]
    BadEnv { var: String, value: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// CLI exit code: 2 for malformed input, 1 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotPrime(_)
            | Error::NotPrimePower(_)
            | Error::EltRange { .. }
            | Error::MessageLength { .. }
            | Error::IndexOutOfRange { .. }
            | Error::BadPermutation(_)
            | Error::BadAdjacency(_)
            | Error::Parse { .. }
            | Error::BadEnv { .. }
            | Error::Io(_) => 2,
            _ => 1,
        }
    }
}
