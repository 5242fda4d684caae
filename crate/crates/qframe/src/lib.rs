//! File formats and the `qframe` command line for [`qframe_core`].

pub mod canonical;
pub mod cli;
pub mod error;
pub mod formats;

pub use error::{CliError, CliResult};
