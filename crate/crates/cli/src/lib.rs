//! Command-line front end for `newton-cond-core`: Table 1 reproduction,
//! condition reports, growth-rate profiles, limit series, matrix dumps and a
//! seeded perturbation experiment, with CSV and JSON output.

pub mod commands;
pub mod dump;
mod error;
pub mod format;
pub mod perturb;
pub mod report;
pub mod table1;

pub use error::{CliError, Result, EXIT_INVARIANT, EXIT_USAGE};
