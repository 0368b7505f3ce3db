//! Verification harness over the exact algebra model: a check registry
//! grouped into cases, deterministic runs, and text/JSON reports.

pub mod checks;
pub mod report;

pub use checks::{run, Arith, Case};
pub use report::{Format, Report, Status};
