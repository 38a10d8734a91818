//! Outcomes of verification checks.

use alloc::format;
use alloc::string::String;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Not decidable with the computed degrees.
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: String,
    pub instance: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn new(check: &str, instance: String, status: Status, witness: Option<String>) -> Self {
        CheckOutcome {
            check: String::from(check),
            instance,
            status,
            witness,
        }
    }

    pub fn pass(check: &str, instance: String) -> Self {
        Self::new(check, instance, Status::Pass, None)
    }

    pub fn fail(check: &str, instance: String, witness: String) -> Self {
        Self::new(check, instance, Status::Fail, Some(witness))
    }

    pub fn skipped(check: &str, instance: String, reason: String) -> Self {
        Self::new(check, instance, Status::Skipped, Some(reason))
    }

    /// Pass or fail according to `ok`, with the witness kept on failure.
    pub fn verdict(check: &str, instance: String, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(check, instance)
        } else {
            Self::fail(check, instance, witness())
        }
    }

    /// `Ok(None)` passes, `Ok(Some(witness))` fails.  Errors from missing
    /// degrees or exceeded bounds are skips; all other errors fail.
    pub fn from_result(check: &str, instance: String, r: Result<Option<String>>) -> Self {
        match r {
            Ok(None) => Self::pass(check, instance),
            Ok(Some(w)) => Self::fail(check, instance, w),
            Err(e @ (Error::Truncated { .. } | Error::Capability(_))) => Self::skipped(check, instance, format!("{e}")),
            Err(e) => Self::fail(check, instance, format!("{e}")),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
