use thiserror::Error;

/// Errors raised across the library.
///
/// The variants fall into three families that the command-line front end
/// maps onto distinct exit codes: input validation, exhausted resource caps,
/// and mathematical preconditions (for instance an unbounded weight).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("automaton is not deterministic")]
    NotDeterministic,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} cap of {cap} exceeded")]
    CapExceeded { what: &'static str, cap: usize },

    /// The weight function has a circuit of positive weight.
    #[error("weight function is unbounded: circuit `{circuit}` has weight {weight}")]
    Unbounded { circuit: String, weight: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code associated with this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::Unbounded { .. } | Error::Precondition(_) => 4,
            _ => 2,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Invalid(_) => "invalid",
            Error::UnknownLetter(_) => "unknown_letter",
            Error::AlphabetMismatch(_) => "alphabet_mismatch",
            Error::NotDeterministic => "not_deterministic",
            Error::Parse(_) => "parse",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::Unbounded { .. } => "unbounded",
            Error::Precondition(_) => "precondition",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
