//! Std companion to `unavoid-core`: the set-file format, region sweeps with
//! resumable record files, and the verification suites behind the CLI.

pub mod setfile;
pub mod suites;
pub mod sweep;

pub use setfile::{format_set, parse_set, ParseError};
