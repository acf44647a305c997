use thiserror::Error;

/// Validation and persistence failures of the episodic memory.
#[derive(Debug, Error)]
pub enum MemoryError {
    #[error("time step {value} outside [0, {bound})")]
    TimeOutOfRange { value: u32, bound: u32 },
    #[error("place id {value} outside [0, {bound})")]
    PlaceOutOfRange { value: u32, bound: u32 },
    #[error("trace for agent {agent_id}: time steps not strictly increasing at event {position}")]
    NonIncreasingTrace { agent_id: u32, position: usize },
    #[error("trace for agent {agent_id} has {len} events, more than the {bound}-hour horizon")]
    TraceTooLong { agent_id: u32, len: usize, bound: u32 },
    #[error("agent {agent_id} is already encoded")]
    DuplicateAgent { agent_id: u32 },
    #[error("invalid memory bounds: time horizon {time_horizon}, place count {place_count}")]
    InvalidBounds { time_horizon: u32, place_count: u32 },
    #[error("snapshot line {line}: {message}")]
    SnapshotParse { line: usize, message: String },
    #[error("snapshot i/o: {0}")]
    SnapshotIo(#[from] std::io::Error),
}

impl MemoryError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        MemoryError::SnapshotParse {
            line,
            message: message.into(),
        }
    }
}
