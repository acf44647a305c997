use thiserror::Error;

/// Contract violations raised by fusion ART operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArtError {
    /// Input and weight lengths differ on a named channel.
    #[error("channel {channel}: dimension mismatch (input {input_len}, weights {weight_len})")]
    DimensionMismatch {
        channel: usize,
        input_len: usize,
        weight_len: usize,
    },
    /// Input and weight lengths differ in a single-vector operation.
    #[error("dimension mismatch: input length {input_len}, weight length {weight_len}")]
    LengthMismatch { input_len: usize, weight_len: usize },
    /// The number of presented channels does not match the node or field.
    #[error("expected {expected} channels, got {actual}")]
    ChannelCountMismatch { expected: usize, actual: usize },
    /// An activity value fell outside `[0, 1]`.
    #[error("activity element {index} = {value} is outside [0, 1]")]
    ActivityOutOfRange { index: usize, value: f64 },
    /// A parameter violated its bounds.
    #[error("parameter {name} = {value} is outside its valid range")]
    InvalidParameter { name: &'static str, value: f64 },
    /// Channel index beyond the node's channel count.
    #[error("unknown channel {channel} (node has {channels})")]
    UnknownChannel { channel: usize, channels: usize },
}
