use thiserror::Error;

/// Configuration and dataset-format failures of the simulator.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("invalid scenario config: {0}")]
    InvalidConfig(String),
    #[error("dataset file {file}, line {line}: {message}")]
    DatasetParse {
        file: String,
        line: usize,
        message: String,
    },
    #[error("dataset i/o on {path}: {source}")]
    DatasetIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Memory(#[from] stem_memory::MemoryError),
}

impl SimError {
    pub(crate) fn io(path: impl Into<String>) -> impl FnOnce(std::io::Error) -> SimError {
        let path = path.into();
        move |source| SimError::DatasetIo { path, source }
    }

    pub(crate) fn parse(file: &str, line: usize, message: impl Into<String>) -> SimError {
        SimError::DatasetParse {
            file: file.to_string(),
            line,
            message: message.into(),
        }
    }
}
