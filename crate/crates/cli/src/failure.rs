use std::fmt;
use std::process::ExitCode;

/// A failed invocation and the exit status it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Unreadable or invalid configuration: exit 2.
    Usage(String),
    /// A cost or threshold constraint does not hold: exit 3.
    Constraint(String),
    /// Anything else, including an oracle disagreement: exit 1.
    Runtime(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Runtime(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Constraint(_) => 3,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "configuration error: {m}"),
            Failure::Constraint(m) => write!(f, "{m}"),
            Failure::Runtime(m) => write!(f, "{m}"),
        }
    }
}

impl From<reject_lab::Error> for Failure {
    fn from(e: reject_lab::Error) -> Self {
        use reject_lab::Error as E;
        match e {
            E::ConstraintViolation { .. } | E::DegenerateThresholds { .. } => {
                Failure::Constraint(e.to_string())
            }
            E::InvalidModel(_) | E::InvalidInterval { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Runtime(format!("csv error: {e}"))
    }
}
