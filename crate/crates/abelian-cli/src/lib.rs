//! Library side of the CLI: the bundled reference tables and their
//! recomputation, shared between the `abelian` binary and the acceptance
//! test-suite.

pub mod tables;

pub use tables::{table_report, TableReport, TableRow};
