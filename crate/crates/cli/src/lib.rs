//! File formats and reports for the `inclust` command-line tool.

pub mod format;
pub mod report;
