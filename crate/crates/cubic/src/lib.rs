//! File formats, command-line front end and scenario runner for
//! [`cubic_core`].

#![forbid(unsafe_code)]

pub mod cli;
pub mod error;
pub mod io;
pub mod scenario;

pub use error::{CliError, Result};
pub use io::{Document, Kind};
