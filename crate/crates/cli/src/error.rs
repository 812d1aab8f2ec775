use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// Malformed file content; `at` locates the problem (line/column or node).
    #[error("{what} {at}: {message}")]
    Format { what: &'static str, at: String, message: String },
    #[error("exact inference unavailable: {0}")]
    OracleUnavailable(#[source] qmcbn_core::Error),
    #[error("{method} run {run}: {source}")]
    Estimation {
        method: &'static str,
        run: u32,
        #[source]
        source: qmcbn_core::Error,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Core(#[from] qmcbn_core::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}
