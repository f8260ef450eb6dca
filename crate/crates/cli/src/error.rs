use std::fmt;

use liekit::chars::CharError;
use liekit::freelie::FreeLieError;
use liekit::liealg::LieAlgError;
use liekit::rootsys::RootSysError;
use liekit::symfun::SymFunError;
use liekit::voganforms::VoganError;
use liekit::weyl::WeylError;

/// Validation failures exit with 2, resource caps with 3.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Cap(_) => 3,
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "{m}"),
            CliError::Cap(m) => write!(f, "resource cap: {m}"),
        }
    }
}

macro_rules! classify {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                if e.is_resource_cap() {
                    CliError::Cap(e.to_string())
                } else {
                    CliError::Invalid(e.to_string())
                }
            }
        }
    )*};
}

classify!(CharError, FreeLieError, LieAlgError, SymFunError, VoganError, WeylError);

impl From<RootSysError> for CliError {
    fn from(e: RootSysError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}
