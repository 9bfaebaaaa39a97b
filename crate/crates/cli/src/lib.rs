//! Command-line front end for the `twoparam` engine.

mod app;
pub mod golden;
pub mod report;
pub mod suites;

pub use app::{parse_weight, run};
