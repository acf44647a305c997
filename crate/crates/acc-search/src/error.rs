use thiserror::Error;

/// Contract violations and parse failures in the search layer.
#[derive(Debug, Error)]
pub enum SearchError {
    #[error("evidence length {evidence_len} does not match registry size {registry_len}")]
    EvidenceLengthMismatch {
        evidence_len: usize,
        registry_len: usize,
    },
    #[error("invalid search parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("top-k selection requires k >= 1")]
    ZeroK,
    #[error("query table line {line}: {message}")]
    TableParse { line: usize, message: String },
    #[error("query table i/o: {0}")]
    TableIo(#[from] std::io::Error),
}
