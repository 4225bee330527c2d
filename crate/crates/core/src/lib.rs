//! Measures how close candidate pairs are to being clones in ordinal
//! elections, runs voting rules under parallel-universe tie-breaking, and
//! checks independence axioms against profiles.
//!
//! Everything here is a pure function over immutable values, so profiles and
//! matrices can be shared across threads freely.

pub mod axioms;
pub mod clones;
pub mod error;
pub mod fixtures;
pub mod ingest;
pub mod profile;
pub mod rules;
pub mod samplers;

pub use error::Error;
pub use profile::{
    condorcet_winner, embed_after_removal, margin_matrix, smith_set, Ballot, Candidate,
    MarginMatrix, PositionIndex, Profile,
};
pub use rules::{evaluate, PutLimits, RuleId, WinnerSet};
