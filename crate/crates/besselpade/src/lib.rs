//! Command-line front end for `besselpade-core`: JSON design reports,
//! transfer-function files, CSV frequency sweeps and the approximant
//! comparison table.

pub mod compare;
pub mod error;
pub mod report;
pub mod source;
pub mod sweep;

pub use error::CliError;
