use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vocabulary must contain at least one statement")]
    EmptyVocabulary,
    #[error("duplicate statement name `{0}`")]
    DuplicateStatement(String),
    #[error("invalid statement name `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidStatementName(String),
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("operands belong to different vocabularies")]
    VocabularyMismatch,
    #[error("token has length {got}, vocabulary has {expected} statements")]
    TokenLength { expected: usize, got: usize },
    #[error("invalid truth value character `{0}` (expected t, f or u)")]
    InvalidTruthValue(char),
    #[error("interpretation is not two-valued")]
    NotTwoValued,
    #[error("{operation} supports at most {limit} statements, got {atoms} (raise the guard to override)")]
    AtomGuard {
        operation: &'static str,
        atoms: usize,
        limit: usize,
    },
    #[error("search node budget of {0} exhausted")]
    BudgetExceeded(u64),
    #[error("characterization relation is not functional")]
    NotFunctional,
    #[error("no truth-maximal accepting interpretation for statement `{0}` (relation not closed under the formalism propagator)")]
    NoTruthMaximum(String),
    #[error("statement `{0}` would need an empty attacking set (relation not closed under the formalism propagator)")]
    EmptyAttackSet(String),
    #[error("link ({0},{1}) is neither supporting nor attacking")]
    NotBipolar(String, String),
    #[error("preferred semantics has no characterization predicate; use the dedicated preferred search")]
    PreferredCharacterization,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("realized knowledge base failed oracle verification: {semantics} semantics is {got}, target was {expected}")]
    VerificationFailed {
        semantics: &'static str,
        expected: String,
        got: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
