use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("objective contains an empty target set")]
    EmptyTargetSet,

    #[error("state space of {needed} states exceeds the cap of {cap}")]
    StateSpaceLimit { needed: u128, cap: u128 },

    #[error("period bound exceeds the configured cap")]
    PeriodOverflow,

    #[error("operation requires a one-player game, but `{0}` is owned by Player 2")]
    OnePlayerOnly(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("clause {0} has more than three literals")]
    ClauseTooWide(usize),

    #[error("formula is not normalized: {0}")]
    NotNormalized(String),

    #[error("reduction needs {needed} bits but the word width is {width}")]
    WidthExceeded { needed: u32, width: u32 },

    #[error("variable {0} is not covered by the quantifier prefix")]
    UnquantifiedVariable(u32),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    KindMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
