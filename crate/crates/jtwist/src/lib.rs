//! File formats, check suites and the command-line driver for `jtwist-core`.

pub mod config;
pub mod emit;
pub mod format;
pub mod report;
pub mod suites;
