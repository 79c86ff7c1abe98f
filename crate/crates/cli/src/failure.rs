use std::fmt;

use ict_core::formulas::IctError;
use ict_core::groups::GroupError;
use ict_core::oracle::OracleError;

/// A command failure, carrying the process exit code it maps to.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Cap(String),
    Hypothesis(String),
    Disagreement(String),
    Fact(String),
    Other(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Other(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Hypothesis(_) => 4,
            Failure::Disagreement(_) => 5,
            Failure::Fact(_) => 6,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Failure::Cap(_))
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Cap(m) => write!(f, "{m}"),
            Failure::Hypothesis(m) => write!(f, "{m}"),
            Failure::Disagreement(m) => write!(f, "disagreement: {m}"),
            Failure::Fact(m) => write!(f, "fact violated: {m}"),
            Failure::Other(e) => write!(f, "{e:#}"),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } | GroupError::NoNormalizerMethod { .. } => Failure::Cap(e.to_string()),
            GroupError::InvalidParameters(_) | GroupError::Fixture { .. } => Failure::Usage(e.to_string()),
            other => Failure::Other(other.into()),
        }
    }
}

impl From<IctError> for Failure {
    fn from(e: IctError) -> Self {
        match e {
            IctError::Group(g) => g.into(),
            IctError::NonIntegral(_) | IctError::Hypothesis(_) | IctError::BadGamma(_) => {
                Failure::Hypothesis(e.to_string())
            }
            IctError::InvalidArgument(m) => Failure::Usage(m),
            other => Failure::Other(other.into()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Group(g) => g.into(),
            other => Failure::Other(other.into()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(e.into())
    }
}
