pub mod limits;
pub mod selftest;
pub mod sharpness;
pub mod table;
pub mod transform_check;
pub mod verify;

use std::fmt;

use mu_bargmann::Error;

/// Why a subcommand did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments; exit code 2.
    Usage(String),
    /// A check failed or a computation did not go through; exit code 1.
    Numeric(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Numeric(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Numeric(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidMu(_) | Error::InvalidConfig(_) => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("cannot write output: {e}"))
    }
}

/// Turns the count of failing rows into the command result.
pub fn verdict(failed: usize, total: usize, what: &str) -> Result<(), Failure> {
    if failed == 0 {
        eprintln!("{total} {what} passed");
        Ok(())
    } else {
        Err(Failure::Numeric(format!("{failed} of {total} {what} failed")))
    }
}
