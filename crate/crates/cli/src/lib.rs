//! Command-line layer for `triplex`: system files, check suites and reports.

pub mod error;
pub mod loader;
pub mod report;
pub mod suites;

pub use error::CliError;
pub use loader::{load_system, parse_system, System};
pub use report::{Record, SuiteReport, Verdict};
pub use suites::{run_suite, Config, Suite};
