use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The requested base is not prime.
    NotPrime(u64),
    /// ν_p(0) is undefined.
    UndefinedValuation,
    /// An argument is outside the operation's domain.
    Domain(String),
    /// Two routes to the same quantity disagreed. Always an implementation bug.
    Inconsistency {
        what: &'static str,
        left: String,
        right: String,
    },
    /// The input is valid but too large for the requested route.
    ResourceLimit {
        what: &'static str,
        requested: String,
        cap: String,
    },
    /// A floating evaluation could not be rounded with confidence.
    Precision { what: &'static str, residual: f64 },
    /// Unknown inequality case id.
    UnknownCase(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(
        what: &'static str,
        requested: impl fmt::Display,
        cap: impl fmt::Display,
    ) -> Self {
        use alloc::string::ToString;
        Error::ResourceLimit {
            what,
            requested: requested.to_string(),
            cap: cap.to_string(),
        }
    }

    pub(crate) fn inconsistency(
        what: &'static str,
        left: impl fmt::Display,
        right: impl fmt::Display,
    ) -> Self {
        use alloc::string::ToString;
        Error::Inconsistency {
            what,
            left: left.to_string(),
            right: right.to_string(),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::UndefinedValuation => f.write_str("valuation of 0 is undefined"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Inconsistency { what, left, right } => {
                write!(f, "internal inconsistency in {what}: {left} != {right}")
            }
            Error::ResourceLimit {
                what,
                requested,
                cap,
            } => {
                write!(
                    f,
                    "resource limit: {what} requested {requested}, cap is {cap}"
                )
            }
            Error::Precision { what, residual } => {
                write!(
                    f,
                    "precision error in {what}: rounding residual {residual:e}"
                )
            }
            Error::UnknownCase(id) => write!(f, "unknown inequality case `{id}`"),
        }
    }
}

impl core::error::Error for Error {}
