//! Command-line front end, report formats and threaded enumeration for
//! `mcshane-core`.

#![deny(unsafe_code)]
#![warn(missing_docs)]

pub mod cli;
pub mod output;
pub mod parallel;
