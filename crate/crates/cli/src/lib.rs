//! Command-line front end for `cyclic-core`: subcommands, reports and the
//! JSON file formats.
//!
//! Exit statuses are shared by every subcommand: `0` for success or an
//! affirmative answer, `1` for a mathematically negative answer, `2` for
//! usage and input errors.

pub mod commands;
pub mod format;

pub use commands::Outcome;
