//! Codec errors.

use thiserror::Error;

/// Why an encoding or decoding failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    /// A bit string was empty.
    #[error("empty bit string")]
    EmptyBits,
    /// A bit string contained something other than `0` and `1`.
    #[error("character {found:?} at index {index} is not a bit")]
    NotABit {
        /// Byte offset of the offending character.
        index: usize,
        /// The character.
        found: char,
    },
    /// A member of an E-binary is not a wrapped digit atom.
    #[error("{0} is not a wrapped digit atom")]
    MalformedAtom(String),
    /// Two digit atoms sit at the same position.
    #[error("two digits at position {0}")]
    DuplicatePosition(usize),
    /// A position below the highest one has no digit.
    #[error("no digit at position {0}")]
    MissingPosition(usize),
    /// The value does not fit in 64 bits.
    #[error("value does not fit in 64 bits")]
    Overflow,
    /// A distribution needs at least two frequencies.
    #[error("a distribution needs at least 2 frequencies, got {0}")]
    TooFewFrequencies(usize),
    /// A frequency is NaN or infinite.
    #[error("frequency {0} is not a finite number")]
    NonFiniteFrequency(usize),
    /// All frequencies are equal, so there is no attractor to encode.
    #[error("the distribution is constant and has no attractor")]
    NoRelativeMaximum,
    /// A formula is not an ordered pair.
    #[error("{0} is not an ordered pair")]
    NotAPair(String),
}
