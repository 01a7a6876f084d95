//! Library side of the `memgame` command: config parsing, sweeps, figures,
//! oracle verification and equilibrium reports.

pub mod config;
pub mod error;
pub mod figure;
pub mod format;
pub mod nash;
pub mod sweep;
pub mod verify;

pub use error::{CliError, CliResult};
