//! Exit statuses. The numbers are a stable contract for scripts.

use std::fmt;
use std::process::ExitCode;

use perimax_core::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Usage = 2,
    Invalid = 3,
    Uncertified = 4,
    Violation = 5,
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn new(status: Status, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(Status::Usage, message)
    }

    /// Classification of a library error raised while checking an input.
    pub fn input(e: Error) -> Self {
        let status = match e {
            Error::NotSimple(_) | Error::NotContained(_) | Error::ParityRequiresOdd(_) | Error::MetricMismatch => {
                Status::Invalid
            }
            Error::CertificateSearchFailed { .. } => Status::Uncertified,
            Error::Counterexample { .. } => Status::Violation,
            Error::Construction { .. } => Status::Invalid,
            _ => Status::Usage,
        };
        Self::new(status, e.to_string())
    }

    pub fn code(&self) -> ExitCode {
        ExitCode::from(self.status as u8)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::input(e)
    }
}
