//! Verification pipelines over the local-model crates: run configuration, claim reports,
//! the named verification suites and the subcommand implementations behind the binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod suites;

pub use config::{FieldChoice, RunConfig};
pub use error::{CheckError, CliError};
pub use report::{Bundle, ClaimReport, Status};
pub use suites::{run_suite, Suite};
