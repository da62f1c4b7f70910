//! Job files, reports and the property-suite runner behind the `conecalc` binary.

pub mod job;
pub mod suites;

pub use job::{parse_job, run_job, Job, Report, SCHEMA};
pub use suites::{run_suites, SuiteOptions, SuiteOutcome, SUITES};
