//! Library half of the command-line tool: the growth benchmark harness and
//! the report renderers, kept out of `main` so integration tests can drive
//! them directly.

pub mod bench;
pub mod report;

pub use bench::{bench_growth, growth_csv, GrowthProfile};
