//! Library surface of the command-line frontend: file formats and the
//! subcommand implementations, kept callable so integration tests can drive
//! the full pipeline without spawning processes.

pub mod commands;
pub mod error;
pub mod format;

pub use commands::{FileKind, LogBase};
pub use error::{CliError, CliResult};
