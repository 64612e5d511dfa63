use thiserror::Error;

/// Precondition violations on codec inputs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("field element value {0} is outside 0..=63")]
    ElementOutOfRange(u8),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("zero raised to non-positive power {0}")]
    ZeroToNonPositivePower(i64),
    #[error("unsupported error-correction capability t={0} (expected 1 or 2)")]
    UnsupportedCapability(u32),
    #[error("value {value:#x} does not fit in {bits} bits")]
    WidthOverflow { value: u64, bits: u32 },
    #[error("bit position {position} is outside 0..{len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("cannot place {weight} errors in {len} positions")]
    WeightTooLarge { weight: usize, len: usize },
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("frame count must be at least 1")]
    NoFrames,
}
