//! File formats, report rendering, threaded enumeration and the command line
//! front end for `boolspec-core`.

pub mod cli;
pub mod format;
pub mod parallel;
pub mod report;
pub mod surface;
