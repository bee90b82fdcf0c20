use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("incompatible cyclotomic orders {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error("quantum integer undefined: t = t^-1")]
    DegenerateT,
    #[error("negative argument {0} to quantum factorial")]
    NegativeFactorial(i64),
    #[error("inner product is not an integer: {0}")]
    NonIntegral(String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("singular block in face operator at {0}")]
    Singular(String),
    #[error("triple ({0}; {1}, {2}) is not admissible")]
    NotAdmissible(u32, u32, u32),
    #[error("fusion coefficient is not a non-negative integer: {0}")]
    BadFusion(String),
    #[error("extracted space has dimension {0}, expected 1")]
    Dimension(usize),
    #[error("{line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("empty graded component at {0}")]
    EmptyComponent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
