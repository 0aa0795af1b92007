//! File formats, reports and the command-line front end for
//! `hypermod-core`.

pub mod app;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod format;
pub mod report;
pub mod verify;

pub use error::{CliError, CliResult};
