use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse error classes; the CLI maps each to a fixed exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Domain,
    Precision,
}

impl ErrorClass {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::Parse => 1,
            ErrorClass::Domain => 2,
            ErrorClass::Precision => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("fraction {0} is not in lowest terms")]
    NotReduced(String),

    #[error("{value} is outside {expected}")]
    OutOfRange {
        value: String,
        expected: &'static str,
    },

    #[error("modulus {0} must be odd and at least 3")]
    BadModulus(String),

    #[error("{0} has an even denominator")]
    EvenDenominator(String),

    #[error("sign word {0} ends in a two-minus-then-all-plus tail and is not canonical")]
    NonCanonical(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("interval for {what} is too wide at {bits} bits")]
    PrecisionExhausted { what: String, bits: u32 },

    #[error("radicand interval lies entirely below zero at depth {depth}")]
    InconsistentTower { depth: usize },

    #[error("division by an interval containing zero")]
    DivisionByZero,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } => ErrorClass::Parse,
            Error::PrecisionExhausted { .. }
            | Error::InconsistentTower { .. }
            | Error::DivisionByZero => ErrorClass::Precision,
            _ => ErrorClass::Domain,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.class().exit_code()
    }

    pub(crate) fn parse(what: &'static str, input: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.into(),
        }
    }

    pub(crate) fn out_of_range(value: impl ToString, expected: &'static str) -> Self {
        Error::OutOfRange {
            value: value.to_string(),
            expected,
        }
    }
}
