use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("ground set must be nonempty")]
    EmptyGroundSet,

    #[error("size mismatch: {left} points vs {right} points")]
    SizeMismatch { left: usize, right: usize },

    #[error("map does not preserve the partition: block {block} meets blocks {first} and {second}")]
    NotPreserving {
        block: usize,
        first: usize,
        second: usize,
    },

    #[error("map is not in Sigma: image misses block {block}")]
    NotInSigma { block: usize },

    #[error("map is not a bijection")]
    NotBijective,

    #[error("map is a bijection; its kernel is the discrete partition")]
    Bijective,

    #[error("map is constant; every nontrivial partition is preserved, use find-partition")]
    ConstantMap,

    #[error("permutation is not a full cycle on {n} points")]
    NotFullCycle { n: usize },

    #[error("block count {m} out of range: need 1 < m < {n}")]
    BlockCountOutOfRange { m: usize, n: usize },

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("enumeration guard exceeded: {what} needs {required} candidates, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        required: String,
        limit: u64,
    },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
