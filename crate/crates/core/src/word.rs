use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{invalid, Error, Result};

/// Character used for a hole in text I/O.
pub const HOLE_CHAR: char = '-';

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Hole,
    Letter(Letter),
}

impl Symbol {
    #[inline]
    pub fn letter(self) -> Option<Letter> {
        match self {
            Symbol::Hole => None,
            Symbol::Letter(l) => Some(l),
        }
    }

    #[inline]
    pub fn is_hole(self) -> bool {
        matches!(self, Symbol::Hole)
    }

    /// Holes match anything.
    #[inline]
    pub fn compatible(self, other: Symbol) -> bool {
        match (self, other) {
            (Symbol::Letter(x), Symbol::Letter(y)) => x == y,
            _ => true,
        }
    }
}

impl From<Letter> for Symbol {
    fn from(l: Letter) -> Self {
        Symbol::Letter(l)
    }
}

/// A finite word over `A ∪ {hole}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PartialWord {
    symbols: Vec<Symbol>,
}

impl PartialWord {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        PartialWord { symbols }
    }

    pub fn total(letters: &[Letter]) -> Self {
        PartialWord {
            symbols: letters.iter().copied().map(Symbol::Letter).collect(),
        }
    }

    pub fn holes(n: usize) -> Self {
        PartialWord {
            symbols: alloc::vec![Symbol::Hole; n],
        }
    }

    /// `first ⋄^{g1} l1 ⋄^{g2} l2 ...`: a letter followed by (gap, letter) steps.
    ///
    /// `gapped(a, &[(m - 2, b)])` is `a⋄^{m-2}b`.
    pub fn gapped(first: Letter, steps: &[(usize, Letter)]) -> Self {
        let mut symbols = Vec::with_capacity(1 + steps.iter().map(|s| s.0 + 1).sum::<usize>());
        symbols.push(Symbol::Letter(first));
        for &(gap, l) in steps {
            symbols.extend(core::iter::repeat_n(Symbol::Hole, gap));
            symbols.push(Symbol::Letter(l));
        }
        PartialWord { symbols }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Option<Symbol> {
        self.symbols.get(i).copied()
    }

    #[inline]
    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// `D(u)` together with the letters found there.
    pub fn defined(&self) -> impl Iterator<Item = (usize, Letter)> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.letter().map(|l| (i, l)))
    }

    pub fn hole_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_hole())
            .map(|(i, _)| i)
    }

    /// `h(u)`.
    pub fn hole_count(&self) -> usize {
        self.symbols.iter().filter(|s| s.is_hole()).count()
    }

    pub fn is_total(&self) -> bool {
        self.hole_count() == 0
    }

    /// True for the empty word and for `⋄^n`; either makes a set trivially unavoidable.
    pub fn is_trivial(&self) -> bool {
        self.symbols.iter().all(|s| s.is_hole())
    }

    /// `u ↑ v`. Words of different length are an error, not `false`.
    pub fn compatible(&self, other: &PartialWord) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .symbols
            .iter()
            .zip(&other.symbols)
            .all(|(x, y)| x.compatible(*y)))
    }

    /// True if `self` is obtained from `other` by turning zero or more letters into holes.
    pub fn is_weakening_of(&self, other: &PartialWord) -> bool {
        self.len() == other.len()
            && self
                .symbols
                .iter()
                .zip(&other.symbols)
                .all(|(x, y)| x.is_hole() || x == y)
    }

    /// True if `self` is a weakening of some factor of `other`.
    pub fn weakens_factor_of(&self, other: &PartialWord) -> bool {
        if self.len() > other.len() {
            return false;
        }
        (0..=other.len() - self.len()).any(|start| {
            self.symbols
                .iter()
                .zip(&other.symbols[start..])
                .all(|(x, y)| x.is_hole() || x == y)
        })
    }

    pub fn strengthen(&self, pos: usize, letter: Letter) -> Result<PartialWord> {
        match self.get(pos) {
            None => Err(Error::PositionOutOfRange {
                pos,
                len: self.len(),
            }),
            Some(Symbol::Letter(_)) => Err(Error::NotAHole(pos)),
            Some(Symbol::Hole) => {
                let mut symbols = self.symbols.clone();
                symbols[pos] = Symbol::Letter(letter);
                Ok(PartialWord { symbols })
            }
        }
    }

    pub fn weaken(&self, pos: usize) -> Result<PartialWord> {
        match self.get(pos) {
            None => Err(Error::PositionOutOfRange {
                pos,
                len: self.len(),
            }),
            Some(Symbol::Hole) => Err(Error::NotDefined(pos)),
            Some(Symbol::Letter(_)) => {
                let mut symbols = self.symbols.clone();
                symbols[pos] = Symbol::Hole;
                Ok(PartialWord { symbols })
            }
        }
    }

    pub fn reversed(&self) -> PartialWord {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        PartialWord { symbols }
    }

    pub fn slice(&self, start: usize, end: usize) -> PartialWord {
        PartialWord {
            symbols: self.symbols[start..end].to_vec(),
        }
    }

    pub fn push(&mut self, s: Symbol) {
        self.symbols.push(s);
    }

    pub fn last(&self) -> Option<Symbol> {
        self.symbols.last().copied()
    }

    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> PartialWord {
        PartialWord {
            symbols: self
                .symbols
                .iter()
                .map(|s| match s {
                    Symbol::Hole => Symbol::Hole,
                    Symbol::Letter(l) => Symbol::Letter(f(*l)),
                })
                .collect(),
        }
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.symbols.iter().filter_map(|s| s.letter()).max()
    }

    pub fn check_alphabet(&self, alphabet: Alphabet) -> Result<()> {
        self.defined().try_for_each(|(_, l)| alphabet.check(l))
    }
}

impl fmt::Display for PartialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use core::fmt::Write;
        for s in &self.symbols {
            match s {
                Symbol::Hole => f.write_char(HOLE_CHAR)?,
                Symbol::Letter(l) => f.write_char(l.to_char())?,
            }
        }
        Ok(())
    }
}

impl FromStr for PartialWord {
    type Err = Error;

    /// Letters `a..z`; `-` or `⋄` is a hole.
    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| match c {
                HOLE_CHAR | '⋄' => Ok(Symbol::Hole),
                c => Letter::from_char(c)
                    .map(Symbol::Letter)
                    .ok_or_else(|| invalid(alloc::format!("bad character {c:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PartialWord { symbols })
    }
}

impl From<PartialWord> for String {
    fn from(w: PartialWord) -> String {
        alloc::format!("{w}")
    }
}
