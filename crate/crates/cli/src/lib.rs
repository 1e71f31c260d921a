//! IO, file formats and the threaded enumeration driver behind the
//! `z4codes` binary.

pub mod format;
pub mod report;
pub mod runner;
