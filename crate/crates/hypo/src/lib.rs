//! File formats, JSON reports and the command-line front end for `hypo-core`.

pub mod certfile;
pub mod cli;
pub mod formats;
pub mod report;
