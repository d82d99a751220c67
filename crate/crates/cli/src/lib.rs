//! Command-line front end for `resmc`: JSON instance files, Graphviz export,
//! a parallel brute-force oracle and the `resmc` subcommands.

pub mod commands;
pub mod dot;
pub mod instance;
pub mod search;

pub use commands::{Exit, Format, Output};
pub use instance::{Instance, InstanceFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed input: bad instance file, unsupported parameters.
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] resmc::Error),
}
