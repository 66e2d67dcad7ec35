use thiserror::Error;

use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse permutation {input:?}: {reason}")]
    ParsePermutation { input: String, reason: String },

    #[error("{values:?} is not a rearrangement of 1..={len}")]
    NotAPermutation { values: Vec<usize>, len: usize },

    #[error("cannot parse vincular pattern {input:?}: {reason}")]
    ParsePattern { input: String, reason: String },

    #[error("permutation {perm} contains the pattern {pattern}")]
    ContainsPattern { perm: Perm, pattern: Perm },

    #[error("permutation {0} is empty")]
    Empty(Perm),

    #[error("permutation {0} does not begin with its largest entry")]
    NotLeadingMax(Perm),

    #[error("permutation {0} is too short (length at least 2 required)")]
    TooShort(Perm),

    #[error("inconsistent pair c={c:?}, m={m:?}: {reason}")]
    InconsistentPair {
        c: Vec<usize>,
        m: Vec<usize>,
        reason: &'static str,
    },

    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),

    #[error("unknown bijection {0:?}")]
    UnknownBijection(String),

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    #[error("length {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("tables are not comparable: {0}")]
    Incomparable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
