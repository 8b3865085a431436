use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Evaluation left the domain of some node (log of a nonpositive value,
    /// real power of a nonpositive base, division by zero, overflow).
    #[error("domain error: {0}")]
    Domain(String),

    /// A two-sided jet was requested at a kink whose one-sided jets differ.
    #[error("not differentiable at x = {x}: one-sided jets differ")]
    NonDifferentiable { x: f64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("function slot `{0}` is not bound")]
    MissingSlot(String),

    #[error("no sampling family for slot `{0}`")]
    MissingFamily(String),

    #[error("expected {expected} weight functions, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("degenerate scaling: {0}")]
    DegenerateScaling(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by evaluating a function outside its domain.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::NonDifferentiable { .. })
    }
}
