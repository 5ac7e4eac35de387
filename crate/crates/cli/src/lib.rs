//! Experiment runner behind the `mopzeros` binary: config files, command
//! implementations and the comparison report.

pub mod commands;
pub mod config;
pub mod error;
pub mod experiment;

pub use commands::{cmd_compare, cmd_density, cmd_poly, cmd_report, cmd_zeros, compare, ComparisonReport, Report};
pub use config::ExperimentConfig;
pub use error::{CliError, CliResult};
pub use experiment::Experiment;
