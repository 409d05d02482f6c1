//! Library side of the `qhgr` command-line tool.

pub mod commands;
pub mod config;

pub use commands::CliError;
pub use config::{ConfigError, Format, RunConfig};
