use thiserror::Error;

/// Failures of the command-line front end. All of them map to exit code 1.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad command line, scenario or parameter combination.
    #[error("usage: {0}")]
    Usage(String),

    #[error("scenario line {line}: {msg}")]
    Scenario { line: usize, msg: String },

    #[error(transparent)]
    Core(#[from] slater_core::Error),

    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),

    #[error("json output: {0}")]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = Result<T, CliError>;

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
