use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Root system label or rank outside the supported list.
    UnsupportedSystem(String),
    /// A computation needs a graded piece of the algebra that has not been
    /// computed and is not known to vanish.
    Truncated { needed: usize, computed: usize },
    /// A root sequence is not a valid chain; `step` is the first failing step.
    InvalidChain { step: usize, reason: String },
    /// An operation's precondition does not hold.
    Precondition(String),
    /// The requested size exceeds a configured capability bound.
    Capability(String),
    /// An internal consistency check failed.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedSystem(s) => write!(f, "unsupported root system: {s}"),
            Error::Truncated { needed, computed } => write!(
                f,
                "degree {needed} is needed but the tower is only computed through degree {computed}"
            ),
            Error::InvalidChain { step, reason } => {
                write!(f, "invalid chain at step {step}: {reason}")
            }
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::Capability(s) => write!(f, "capability exceeded: {s}"),
            Error::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl core::error::Error for Error {}
