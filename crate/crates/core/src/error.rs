use thiserror::Error;

/// Errors shared by profile operations, voting rules, and axiom checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("profile needs at least one candidate")]
    NoCandidates,
    #[error("profile needs at least one ballot")]
    NoBallots,
    #[error("ballot {ballot} has zero multiplicity")]
    ZeroMultiplicity { ballot: usize },
    #[error("ballot {ballot} is not a permutation of the candidate set")]
    NotAPermutation { ballot: usize },
    #[error("unknown candidate index {0}")]
    UnknownCandidate(usize),
    #[error("ballot index {index} out of range for {count} ballots")]
    BallotOutOfRange { index: usize, count: usize },
    #[error("cannot remove the last remaining candidate")]
    LastCandidate,
    #[error("need at least {required} candidates, profile has {actual}")]
    TooFewCandidates { required: usize, actual: usize },
    #[error("clone measures are defined for two distinct candidates")]
    IdenticalPair,
    #[error("tie-breaking explored more than {cap} states")]
    UniverseCap { cap: u64 },
    #[error("{size} pairs share one margin value, above the group cap of {cap}")]
    MarginGroupCap { size: usize, cap: usize },
}

impl Error {
    /// True for errors caused by resource caps rather than malformed input.
    /// Batch drivers record these per cell instead of aborting the run.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::UniverseCap { .. } | Error::MarginGroupCap { .. }
        )
    }
}
