use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("no trees of degree 0")]
    NoTreesOfDegreeZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("B∞ data incomplete for degree {0}")]
    IncompleteBInfty(usize),

    #[error("not unital infinitesimal: {0}")]
    NotUnitalInfinitesimal(String),

    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: usize, bound: usize },

    #[error("single-generator input required, found label `{0}`")]
    NotSingleGenerator(String),

    /// An identity that must hold by construction failed.
    #[error("internal consistency violation: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for input errors (bad syntax or arguments), false for failed invariants.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Consistency(_))
    }
}
