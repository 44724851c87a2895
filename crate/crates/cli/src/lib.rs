//! File formats, reports and command implementations behind the
//! `graded-basic` binary, plus seeded instance generators.

pub mod commands;
pub mod error;
pub mod formats;
pub mod generate;
pub mod parallel;
pub mod report;
pub mod sampling;

pub use error::CliError;
pub use report::{render, Format, Report};
