use thiserror::Error;

/// Errors produced by the engine.
///
/// Variants are grouped by how a caller is expected to react: parse errors
/// name the offending token, bound errors name the limit that was hit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("rank {rank} out of bounds for type {family}: {bound}")]
    RankOutOfBounds {
        family: char,
        rank: usize,
        bound: &'static str,
    },

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("type mismatch: {left} vs {right}")]
    TypeMismatch { left: String, right: String },

    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),

    #[error("node {node} is not a valid {kind} node (rank {rank})")]
    BadNode {
        node: usize,
        kind: &'static str,
        rank: usize,
    },

    #[error("{what}: requested {requested} exceeds {limit_name} = {limit} (raise it with {flag})")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
        limit_name: &'static str,
        flag: &'static str,
    },

    #[error("element {0} is not a minimal coset representative")]
    NotMinRep(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::RankOutOfBounds { .. } | Error::BadNode { .. }
        )
    }

    pub fn is_bound(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }
}
