use thiserror::Error;

/// Errors surfaced by construction and analysis routines.
///
/// Everything here is a *caller* error or a structural failure detected by an
/// exact check; numerical failure modes do not exist since all arithmetic is
/// rational.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        got: usize,
    },

    #[error("generators are not linearly independent: {0}")]
    DependentGenerators(String),

    #[error("generator set is not closed under the bracket: {0}")]
    NotBracketClosed(String),

    #[error("matrix does not commute with the generators: {0}")]
    DoesNotCommute(String),

    #[error("subspace is not invariant under the action: {0}")]
    NotInvariant(String),

    #[error("unsupported signature: {0}")]
    UnsupportedSignature(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("invalid recipe: {0}")]
    Recipe(String),

    #[error("analysis stage `{stage}` failed: {source}")]
    Pipeline {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn at_stage(self, stage: &'static str) -> Error {
        Error::Pipeline {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
