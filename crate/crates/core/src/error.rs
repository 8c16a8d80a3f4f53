use thiserror::Error;

/// Errors raised by engine operations whose preconditions fail.
///
/// Hypothesis-relative uncertainty is never an error; it is reported as
/// [`crate::Verdict::Independent`].
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unclassified atom `{0}`")]
    UnclassifiedAtom(String),
    #[error("successor of opaque atom `{0}` is not representable")]
    AtomSuccessor(String),
    #[error("an index base must be an aleph, not atom `{0}`")]
    AtomBase(String),
    #[error("index not representable: {0}")]
    Unrepresentable(String),
    #[error("μ must be regular (got {0})")]
    MuNotRegular(String),
    #[error("inconsistent context: {0}")]
    InconsistentContext(String),
    #[error("rule inapplicable: λ = λ^<μ = {0}")]
    RuleInapplicable(String),
    #[error("not a limit regular cardinal: {0}")]
    NotLimitRegular(String),
    #[error("outside class: {0}")]
    OutsideClass(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
