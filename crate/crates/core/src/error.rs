use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence needs at least two entries, got {0}")]
    TooShort(usize),
    #[error("entry {value} at position {index} is not positive")]
    NonPositive { index: usize, value: i64 },
    #[error("entry {0} occurs more than once")]
    NotDistinct(u64),
    #[error("gcd of the entries is {0}, expected 1")]
    GcdNotOne(u64),
    #[error("last entry {last} is not the strict maximum (found {max})")]
    MaxNotLast { last: u64, max: u64 },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("generator {0} is not homogeneous for the supplied grading")]
    NotHomogeneous(String),
    #[error("basis exceeded the cap of {0} elements")]
    BasisCapExceeded(usize),
    #[error("tail of {0} has larger degree than its lead")]
    TailLarger(String),
    #[error("monomial ideal has infinitely many standard monomials")]
    InfiniteStaircase,
    #[error("standard monomial count exceeds the bound {0}")]
    BoundExceeded(usize),
    #[error("{0} is not an element of the Apéry set")]
    NotInAperySet(u64),
    #[error("monomial ideal does not contain m^{0}")]
    PowerNotContained(u64),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("criteria disagree: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
