use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{invalid, Error, Result};
use crate::word::PartialWord;

/// A finite, duplicate-free set of partial words over one alphabet.
///
/// Insertion order is kept so that every traversal (and every printed set) is
/// deterministic. Words may have mixed lengths; [`WordSet::uniform_length`]
/// reports `Some(m)` for m-uniform sets.
#[derive(Debug, Clone)]
pub struct WordSet {
    alphabet: Alphabet,
    words: Vec<PartialWord>,
}

impl WordSet {
    pub fn new(alphabet: Alphabet, words: impl IntoIterator<Item = PartialWord>) -> Result<Self> {
        let mut out: Vec<PartialWord> = Vec::new();
        for w in words {
            w.check_alphabet(alphabet)?;
            if !out.contains(&w) {
                out.push(w);
            }
        }
        if out.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(WordSet {
            alphabet,
            words: out,
        })
    }

    /// Parses whitespace- or comma-separated words, e.g. `"a--a, b--b"`.
    pub fn parse(alphabet: Alphabet, s: &str) -> Result<Self> {
        let words = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<PartialWord>>>()?;
        WordSet::new(alphabet, words)
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn words(&self) -> &[PartialWord] {
        &self.words
    }

    pub fn iter(&self) -> core::slice::Iter<'_, PartialWord> {
        self.words.iter()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &PartialWord) -> bool {
        self.words.contains(w)
    }

    pub fn uniform_length(&self) -> Option<usize> {
        let m = self.words.first()?.len();
        self.words.iter().all(|w| w.len() == m).then_some(m)
    }

    pub fn max_len(&self) -> usize {
        self.words.iter().map(PartialWord::len).max().unwrap_or(0)
    }

    /// Contains the empty word or an all-hole word.
    pub fn is_trivial(&self) -> bool {
        self.words.iter().any(PartialWord::is_trivial)
    }

    pub fn total_holes(&self) -> usize {
        self.words.iter().map(PartialWord::hole_count).sum()
    }

    /// `(X \ {old}) ∪ new`, keeping `old`'s slot for the first replacement.
    pub fn replace(
        &self,
        old: &PartialWord,
        new: impl IntoIterator<Item = PartialWord>,
    ) -> Result<WordSet> {
        let idx = self
            .words
            .iter()
            .position(|w| w == old)
            .ok_or_else(|| Error::NotAMember(alloc::format!("{old}")))?;
        let mut words: Vec<PartialWord> = Vec::with_capacity(self.words.len() + 1);
        words.extend_from_slice(&self.words[..idx]);
        words.extend(new);
        words.extend_from_slice(&self.words[idx + 1..]);
        WordSet::new(self.alphabet, words)
    }

    pub fn remove(&self, old: &PartialWord) -> Result<WordSet> {
        self.replace(old, core::iter::empty())
    }

    pub fn rename_letters(&self, perm: &Permutation) -> Result<WordSet> {
        if perm.len() != self.alphabet.size() {
            return Err(Error::NotAPermutation(self.alphabet.size()));
        }
        WordSet::new(
            self.alphabet,
            self.words.iter().map(|w| w.map_letters(|l| perm.apply(l))),
        )
    }

    /// Reverses every word. Reversal preserves avoidability of two-sided infinite words.
    pub fn reversed(&self) -> WordSet {
        WordSet {
            alphabet: self.alphabet,
            words: self.words.iter().map(PartialWord::reversed).collect(),
        }
    }

    /// Same words under a larger alphabet.
    pub fn widen(&self, alphabet: Alphabet) -> Result<WordSet> {
        WordSet::new(alphabet, self.words.iter().cloned())
    }

    /// Order-insensitive equality.
    pub fn same_words(&self, other: &WordSet) -> bool {
        self.alphabet == other.alphabet
            && self.words.len() == other.words.len()
            && self.words.iter().all(|w| other.contains(w))
    }
}

impl PartialEq for WordSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_words(other)
    }
}

impl Eq for WordSet {}

impl fmt::Display for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl<'a> IntoIterator for &'a WordSet {
    type Item = &'a PartialWord;
    type IntoIter = core::slice::Iter<'a, PartialWord>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// A bijection on letter indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(k: usize) -> Self {
        Permutation((0..k as u8).collect())
    }

    pub fn swap(k: usize, a: Letter, b: Letter) -> Self {
        let mut p = Self::identity(k);
        p.0.swap(a.index(), b.index());
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, l: Letter) -> Letter {
        Letter(self.0[l.index()])
    }

    /// Every permutation of `0..k`, in lexicographic order.
    pub fn all(k: usize) -> Vec<Permutation> {
        fn go(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i as u8);
                    go(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut alloc::vec![false; k], &mut out);
        out
    }
}

/// `X0 = T0 ∪ T0'` with `T0 = {a_i⋄^{m-2}a_i}` and `T0' = {a_i⋄^{m-2}a_j | i < j}`.
///
/// T0 comes first, then T0' in lexicographic `(i, j)` order.
pub fn build_x0(k: usize, m: usize) -> Result<WordSet> {
    if m < 2 {
        return Err(invalid(alloc::format!("X0 needs m >= 2, got {m}")));
    }
    let alphabet = Alphabet::new(k)?;
    let same = alphabet
        .letters()
        .map(|a| PartialWord::gapped(a, &[(m - 2, a)]));
    let distinct = alphabet.letters().flat_map(move |a| {
        alphabet
            .letters()
            .filter(move |b| a < *b)
            .map(move |b| PartialWord::gapped(a, &[(m - 2, b)]))
    });
    WordSet::new(alphabet, same.chain(distinct))
}
