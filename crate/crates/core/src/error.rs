use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A hypothesis of the goodness characterization that the input fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    /// The minimum colour-class size must be 1.
    SurplusNotOne { s: usize },
    /// The target must have at least one edge.
    ChromaticBelowTwo { chi: usize },
    /// The multiplicity must be at least the smallest non-divisor.
    MultiplicityBelowSnd { p: u64, snd: u64 },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::SurplusNotOne { s } => write!(f, "s(G) = 1 required, got s(G) = {s}"),
            Hypothesis::ChromaticBelowTwo { chi } => {
                write!(f, "chi(G) >= 2 required, got chi(G) = {chi}")
            }
            Hypothesis::MultiplicityBelowSnd { p, snd } => {
                write!(f, "p >= snd(alpha) required, got p = {p} < {snd}")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {order} exceeds the supported maximum {max}")]
    TooLarge { order: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("order {order} is above the exact-computation bound {bound}")]
    AboveBound { order: usize, bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("hypothesis violated: {0}")]
    Hypothesis(Hypothesis),

    #[error("undecided: search budget of {limit} nodes exhausted")]
    BudgetExceeded { limit: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for errors meaning "not decided within the budget", as opposed
    /// to a rejected input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
