use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generator {index} has no finite order up to {bound}")]
    NotFinite { index: usize, bound: u32 },
    #[error("generator {index} is not an invertible square matrix of the common size")]
    BadGenerator { index: usize },
    #[error("group contains a nontrivial scalar matrix")]
    NotProjectivelyFaithful,
    #[error("class functions live on different class structures")]
    GroupMismatch,
    #[error("no power map for the prime {0}")]
    MissingPowerMap(u32),
    #[error("not a nonnegative integer: {0}")]
    NonIntegral(String),
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("contract violation in `{entry}`: {check}")]
    ContractViolation { entry: String, check: String },
    #[error("{0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
