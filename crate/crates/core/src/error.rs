use thiserror::Error;

use crate::permutation::DashedPattern;
use crate::setpartition::SetPartition;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad category of an [`Error`], used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Input text could not be turned into a valid value.
    Parse,
    /// A well-formed value lies outside the domain of the requested map.
    Domain,
    /// A requested size is above the configured enumeration cap.
    CapExceeded,
    /// An internal consistency check failed.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid token {0:?}")]
    InvalidToken(String),
    #[error("duplicate value {0}")]
    DuplicateValue(u32),
    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: u32, n: usize },
    #[error("block is empty")]
    EmptyBlock,
    #[error("value {0} occurs in more than one block")]
    OverlappingBlocks(u32),
    #[error("ground set has a gap: {0} is missing")]
    GapInGroundSet(u32),
    #[error("invalid restricted growth string: {0}")]
    InvalidGrowthString(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("block {0:?} is a singleton")]
    SingletonBlock(Vec<u32>),
    #[error("the identity permutation has no runs to transfer")]
    IdentityPermutation,
    #[error("not an avoider: contains {pattern} at positions ({}, {}, {}, {})", positions[0], positions[1], positions[2], positions[3])]
    NotAnAvoider {
        pattern: DashedPattern,
        positions: [usize; 4],
    },
    #[error("decomposable (components: {})", format_components(components))]
    Decomposable { components: Vec<SetPartition> },
    #[error("partition has a single block")]
    SingleBlock,
    #[error("partition {0} is not in the image class of the five-step map")]
    NotInImageClass(SetPartition),
    #[error("permutation does not end with 1")]
    NotEndingInOne,
    #[error("size {size} is too small (minimum {min})")]
    TooSmall { size: usize, min: usize },
    #[error("malformed segment list: {0}")]
    MalformedSegments(String),
    #[error("{what} size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::EmptyInput
            | Error::InvalidToken(_)
            | Error::DuplicateValue(_)
            | Error::ValueOutOfRange { .. }
            | Error::EmptyBlock
            | Error::OverlappingBlocks(_)
            | Error::GapInGroundSet(_)
            | Error::InvalidGrowthString(_)
            | Error::LengthMismatch { .. }
            | Error::Io(_) => ErrorKind::Parse,
            Error::SingletonBlock(_)
            | Error::IdentityPermutation
            | Error::NotAnAvoider { .. }
            | Error::Decomposable { .. }
            | Error::SingleBlock
            | Error::NotInImageClass(_)
            | Error::NotEndingInOne
            | Error::TooSmall { .. }
            | Error::MalformedSegments(_) => ErrorKind::Domain,
            Error::CapExceeded { .. } => ErrorKind::CapExceeded,
            Error::Invariant(_) => ErrorKind::Internal,
        }
    }
}

fn format_components(components: &[SetPartition]) -> String {
    components
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" | ")
}
