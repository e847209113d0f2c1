use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected n = {expected}, found n = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degree mismatch: expected m = {expected}, found m = {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("exponent vector must have at least one entry")]
    EmptyExponents,

    #[error("degree overflows the supported integer width")]
    Overflow,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("color {color} is outside 1..={n}")]
    ColorOutOfRange { color: usize, n: usize },

    #[error("illegal move: color {color} needs a positive exponent in slot {slot}")]
    IllegalMove { color: usize, slot: usize },

    #[error("secant index r = {r} is out of range for n = {n}")]
    SecantIndexOutOfRange { r: usize, n: usize },

    #[error("pair index {index} is not a maximal pair")]
    NotMaximalPair { index: usize },

    #[error("poset size {size} exceeds the configured cap {cap}")]
    SizeCap { size: u64, cap: u64 },

    #[error("signature mismatch: expected {expected:?}, found {found:?}")]
    SignatureMismatch { expected: Vec<u32>, found: Vec<u32> },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("stitching inequality fails: 1 + 2*d0 = {lhs} < {rhs}")]
    InequalityViolated { lhs: u64, rhs: u64 },

    #[error("verification failed: {0}")]
    Verification(String),
}
