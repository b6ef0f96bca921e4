use core::fmt;

use crate::error::{Error, Result};

/// Largest supported alphabet; letters render as `'a'..='z'`.
pub const MAX_ALPHABET: usize = 26;

/// A letter, stored as its index `0..k` in the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    pub const A: Letter = Letter(0);
    pub const B: Letter = Letter(1);
    pub const C: Letter = Letter(2);
    pub const D: Letter = Letter(3);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn to_char(self) -> char {
        (b'a' + self.0) as char
    }

    pub fn from_char(c: char) -> Option<Letter> {
        if c.is_ascii_lowercase() {
            Some(Letter(c as u8 - b'a'))
        } else {
            None
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// The alphabet `{a_1, ..., a_k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: u8,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if !(1..=MAX_ALPHABET).contains(&size) {
            return Err(Error::AlphabetSize(size));
        }
        Ok(Alphabet { size: size as u8 })
    }

    #[inline]
    pub fn size(self) -> usize {
        self.size as usize
    }

    pub fn contains(self, l: Letter) -> bool {
        l.0 < self.size
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> + Clone {
        (0..self.size).map(Letter)
    }

    pub(crate) fn check(self, l: Letter) -> Result<()> {
        if self.contains(l) {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                letter: l.0,
                size: self.size,
            })
        }
    }

    pub(crate) fn same_as(self, other: Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.size,
                right: other.size,
            })
        }
    }
}
