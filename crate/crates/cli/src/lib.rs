//! File formats, reports and the command-line front end for `stratih-core`.

pub mod app;
pub mod error;
pub mod files;
pub mod report;

pub use error::CliError;
pub use files::{SpaceFile, ZerosFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
/// A computed identity failed, or the answer to a yes/no question was no.
pub const EXIT_MISMATCH: i32 = 3;
