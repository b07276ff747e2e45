use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate node at index {0}")]
    DuplicateNode(usize),

    #[error("node is not a member of the node set")]
    NodeNotInSet,

    #[error("node set is not {0}-independent")]
    NotIndependent(usize),

    #[error("degree out of range: {0}")]
    DegreeOutOfRange(String),

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("candidate budget of {0} exhausted")]
    BudgetExhausted(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A proved statement failed on a concrete instance. Always a bug.
    #[error("theorem inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
