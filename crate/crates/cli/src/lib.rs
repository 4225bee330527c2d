//! Batch driver library behind the `cloneaudit` binary: experiment
//! configuration, input resolution, the four subcommands, and the
//! brute-force references used by the regression suite.

pub mod axioms_cmd;
pub mod clones_cmd;
pub mod config;
pub mod inputs;
pub mod oracles;
pub mod regress;
pub mod report;
pub mod sample_cmd;
