use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet size {0} is outside 1..=26")]
    AlphabetSize(usize),
    #[error("letter index {letter} is not in an alphabet of size {size}")]
    LetterOutOfRange { letter: u8, size: u8 },
    #[error("alphabet mismatch: {left} letters vs {right} letters")]
    AlphabetMismatch { left: u8, right: u8 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("position {pos} is out of range for a word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("position {0} is already defined")]
    NotAHole(usize),
    #[error("position {0} is a hole")]
    NotDefined(usize),
    #[error("a periodic word needs a non-empty base without holes")]
    BadPeriodicBase,
    #[error("a word set must contain at least one word")]
    EmptySet,
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("word {0} is not a member of the set")]
    NotAMember(String),
    #[error("window graph needs {needed} nodes, cap is {cap}")]
    WindowTooLarge { needed: u128, cap: u64 },
    #[error("prefix-suffix does not apply: {0}")]
    PrefixSuffix(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("certificate {certificate} does not avoid the set (meets {word})")]
    BadCertificate { certificate: String, word: String },
    #[error("family {family} violates its contract at {instance}")]
    FamilyContract { family: String, instance: String },
}

/// Shorthand for building an [`Error::InvalidParameters`].
pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
