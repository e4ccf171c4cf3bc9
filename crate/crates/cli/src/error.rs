use lescop_core::Error as CoreError;
use serde::{Deserialize, Serialize};

use crate::output::WitnessOut;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("time limit of {0} s exceeded")]
    TimeLimit(u64),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Machine-readable error body, printed as `{"error": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorEnvelope {
    pub error: ErrorBody,
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Usage(_) => "usage",
            Self::Input(_) | Self::Json(_) => "input",
            Self::Io(_) => "io",
            Self::TimeLimit(_) => "budget",
            Self::Core(e) => match e {
                CoreError::Parse { .. } => "parse",
                CoreError::Hypothesis(_) | CoreError::NotPeriodic { .. } => "hypothesis",
                CoreError::CrossingBudget { .. } | CoreError::SubsetBudget { .. } | CoreError::Overflow(_) => "budget",
                CoreError::ConventionNotFixed(_) => "conventions",
                CoreError::Calibration(_) => "calibration",
                _ => "input",
            },
        }
    }

    /// 3 for resource budgets, 1 for a failed calibration, 2 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self.kind() {
            "budget" => 3,
            "calibration" => 1,
            _ => 2,
        }
    }

    pub fn body(&self) -> ErrorBody {
        let witnesses = match self {
            Self::Core(CoreError::NotPeriodic { witnesses, .. }) => witnesses.iter().map(WitnessOut::from).collect(),
            _ => Vec::new(),
        };
        ErrorBody { kind: self.kind().into(), detail: self.to_string(), witnesses }
    }
}

pub type CliResult<T> = Result<T, CliError>;
