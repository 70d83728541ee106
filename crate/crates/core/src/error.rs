use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("column `{0}` not found in header")]
    MissingColumn(String),

    #[error("invalid panel: {0}")]
    InvalidPanel(String),

    #[error("{function}: argument {value} outside domain")]
    Domain { function: &'static str, value: f64 },

    #[error("insufficient sample: need {required} rows, have {available}")]
    SampleSize { required: usize, available: usize },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("rank-deficient design: rank {rank} < {columns} columns")]
    RankDeficient { rank: usize, columns: usize },

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("estimation failed: {0}")]
    Estimation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("model file: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True when the error originates from bad input rather than a failed computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::MissingColumn(_)
                | Error::InvalidPanel(_)
                | Error::InvalidArgument(_)
                | Error::Domain { .. }
                | Error::SampleSize { .. }
                | Error::Io { .. }
                | Error::Json(_)
        )
    }
}
