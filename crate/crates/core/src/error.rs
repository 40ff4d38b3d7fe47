use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("letter '{0}' is not in the declared alphabet")]
    UnknownLetter(char),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing section '{0}'")]
    MissingSection(&'static str),
    #[error("line {line}: dangling state id {id}")]
    DanglingState { line: usize, id: usize },
    #[error("line {line}: duplicate transition from state {state} on '{letter}'")]
    DuplicateTransition { line: usize, state: usize, letter: char },
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("monoid exceeds the element cap of {cap}")]
    MonoidTooLarge { cap: usize },
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("language carries no syntactic order; build it with syntactic_morphism")]
    NotSyntactic,
    #[error("chain length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("game budget exceeded: {0} position pairs")]
    BudgetExceeded(usize),
    #[error("derivation does not produce the requested chain: {0}")]
    DerivationMismatch(String),
    #[error("invalid dump: {0}")]
    InvalidDump(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    ResourceCap,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::MonoidTooLarge { .. } | Error::ResourceCap(_) | Error::BudgetExceeded(_) => {
                ErrorKind::ResourceCap
            }
            Error::Inconsistent(_) => ErrorKind::Internal,
            _ => ErrorKind::Input,
        }
    }
}
