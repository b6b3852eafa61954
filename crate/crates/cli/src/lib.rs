//! Command-line front end for the KIS-CES model: config loading, the
//! individual commands, and report encoding.

// `!(x > 0.0)` style checks are deliberate: NaN must fail them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod report;

pub use commands::{run_command, CliError, Command};
pub use config::{parse_config, ConfigError, LoadedConfig, OutputFormat, RunConfig};
pub use report::{emit_report, Report};
