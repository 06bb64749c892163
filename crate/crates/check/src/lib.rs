//! Pattern files, reports and the `kempe-check` command line on top of
//! `kempe-core`.

pub mod cli;
pub mod format;
pub mod report;

pub use format::{parse_pattern, write_pattern, ParseError};
