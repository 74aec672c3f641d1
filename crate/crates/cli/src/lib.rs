//! Library surface of the experiment CLI: scan/estimate machinery and
//! config handling, shared by the binary and the test suites.

pub mod config;
pub mod run;

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
    NoCrossing,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
            CliError::NoCrossing => write!(f, "fraction curve does not cross 0.5 on the grid"),
        }
    }
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::NoCrossing => 4,
        }
    }
}
