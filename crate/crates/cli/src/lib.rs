//! Command-line driver: argument parsing helpers, canonical JSON output,
//! and the batch verification checks behind `ratsign verify-all`.

pub mod json;
pub mod parse;
pub mod verify;
