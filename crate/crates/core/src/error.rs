use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in field")]
    DivisionByZero,

    #[error("field mismatch: operands belong to GF(2^{left}) mod {left_mod:#x} and GF(2^{right}) mod {right_mod:#x}")]
    FieldMismatch {
        left: u32,
        left_mod: u32,
        right: u32,
        right_mod: u32,
    },

    #[error("extension degree {0} outside supported range 3..=20")]
    UnsupportedDegree(u32),

    #[error("modulus {modulus:#x} is not a degree-{m} polynomial")]
    WrongModulusDegree { m: u32, modulus: u32 },

    #[error("modulus {modulus:#x} is not primitive: x has order {order} instead of {expected}")]
    NotPrimitive {
        modulus: u32,
        order: u64,
        expected: u64,
    },

    #[error("element bits {bits:#x} do not fit in GF(2^{m})")]
    ElementOutOfRange { bits: u32, m: u32 },

    #[error("{what} at m = {m} needs about {cost} operations, above the limit of {limit}; rerun with {flag}")]
    BudgetExceeded {
        what: &'static str,
        m: u32,
        cost: u128,
        limit: u128,
        flag: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
