use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::set::{Permutation, WordSet};
use crate::word::PartialWord;

/// The two-sided infinite word `v^Z` for a non-empty total base word `v`.
///
/// Factors may be longer than the period; positions are taken mod `|v|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicWord {
    alphabet: Alphabet,
    base: Vec<Letter>,
}

impl PeriodicWord {
    pub fn new(alphabet: Alphabet, base: Vec<Letter>) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::BadPeriodicBase);
        }
        base.iter().try_for_each(|&l| alphabet.check(l))?;
        Ok(PeriodicWord { alphabet, base })
    }

    pub fn parse(alphabet: Alphabet, s: &str) -> Result<Self> {
        let w: PartialWord = s.parse()?;
        if !w.is_total() {
            return Err(Error::BadPeriodicBase);
        }
        PeriodicWord::new(alphabet, w.defined().map(|(_, l)| l).collect())
    }

    /// Base word from runs, e.g. `[(a, p), (c, q), (b, p)]` for `(a^p c^q b^p)^Z`.
    pub fn from_runs(alphabet: Alphabet, runs: &[(Letter, usize)]) -> Result<Self> {
        let base = runs
            .iter()
            .flat_map(|&(l, n)| core::iter::repeat_n(l, n))
            .collect();
        PeriodicWord::new(alphabet, base)
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn base(&self) -> &[Letter] {
        &self.base
    }

    #[inline]
    pub fn period(&self) -> usize {
        self.base.len()
    }

    /// `w(i)` for any integer position.
    #[inline]
    pub fn at(&self, i: i64) -> Letter {
        self.base[i.rem_euclid(self.base.len() as i64) as usize]
    }

    /// Smallest offset `i < p` whose length-`|u|` factor is compatible with `u`.
    pub fn meets(&self, u: &PartialWord) -> Option<usize> {
        let p = self.base.len();
        let defined: Vec<(usize, Letter)> = u.defined().map(|(j, l)| (j % p, l)).collect();
        (0..p).find(|&i| {
            defined.iter().all(|&(j, l)| {
                let k = i + j;
                self.base[if k >= p { k - p } else { k }] == l
            })
        })
    }

    /// First member of `x` met by this word, with the offset.
    pub fn first_met<'a>(&self, x: &'a WordSet) -> Option<(&'a PartialWord, usize)> {
        x.iter().find_map(|u| self.meets(u).map(|i| (u, i)))
    }

    pub fn avoids(&self, u: &PartialWord) -> bool {
        self.meets(u).is_none()
    }

    pub fn avoids_set(&self, x: &WordSet) -> Result<bool> {
        self.alphabet.same_as(x.alphabet())?;
        Ok(self.first_met(x).is_none())
    }

    /// Like [`PeriodicWord::avoids_set`] but reports which word is met.
    pub fn certify(&self, x: &WordSet) -> Result<()> {
        self.alphabet.same_as(x.alphabet())?;
        match self.first_met(x) {
            None => Ok(()),
            Some((u, _)) => Err(Error::BadCertificate {
                certificate: alloc::format!("{self}"),
                word: alloc::format!("{u}"),
            }),
        }
    }

    pub fn rotate(&self, r: usize) -> PeriodicWord {
        let mut base = self.base.clone();
        let p = base.len();
        base.rotate_left(r % p);
        PeriodicWord {
            alphabet: self.alphabet,
            base,
        }
    }

    pub fn rename(&self, perm: &Permutation) -> PeriodicWord {
        PeriodicWord {
            alphabet: self.alphabet,
            base: self.base.iter().map(|&l| perm.apply(l)).collect(),
        }
    }

    /// Same base word over a larger alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<PeriodicWord> {
        PeriodicWord::new(alphabet, self.base.clone())
    }
}

impl fmt::Display for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.base {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_x0;

    fn k(n: usize) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    #[test]
    fn meets_examples() {
        let u: PartialWord = "a--a".parse().unwrap();
        assert_eq!(PeriodicWord::parse(k(1), "a").unwrap().meets(&u), Some(0));
        assert_eq!(PeriodicWord::parse(k(2), "ab").unwrap().meets(&u), None);
        let w = PeriodicWord::parse(k(3), "aaacccbbb").unwrap();
        assert_eq!(w.meets(&"a--b".parse().unwrap()), None);
        // Smallest offset is reported.
        let w = PeriodicWord::parse(k(2), "baab").unwrap();
        assert_eq!(w.meets(&"a".parse().unwrap()), Some(1));
    }

    #[test]
    fn factors_longer_than_period_wrap() {
        let w = PeriodicWord::parse(k(2), "ab").unwrap();
        assert_eq!(w.meets(&"a-a-a-a".parse().unwrap()), Some(0));
        assert_eq!(w.meets(&"a-----b".parse().unwrap()), None);
        assert_eq!(w.meets(&"b------b".parse().unwrap()), None);
    }

    #[test]
    fn avoids_set_examples() {
        let x = WordSet::parse(k(3), "a--a b--b c--c a--b c--a b--c").unwrap();
        let w = PeriodicWord::parse(k(3), "aaacccbbb").unwrap();
        assert!(w.avoids_set(&x).unwrap());
        let a = PeriodicWord::parse(k(2), "a").unwrap();
        assert!(!a.avoids_set(&build_x0(2, 4).unwrap()).unwrap());
        let x = WordSet::parse(k(2), "a--a b--b").unwrap();
        assert!(PeriodicWord::parse(k(2), "aaabbb").unwrap().avoids_set(&x).unwrap());
        assert!(a.avoids_set(&build_x0(3, 4).unwrap()).is_err());
    }

    #[test]
    fn bad_bases() {
        assert_eq!(PeriodicWord::new(k(2), Vec::new()), Err(Error::BadPeriodicBase));
        assert!(PeriodicWord::parse(k(2), "a-b").is_err());
        assert!(PeriodicWord::parse(k(2), "abc").is_err());
    }

    #[test]
    fn position_arithmetic() {
        let w = PeriodicWord::parse(k(3), "abc").unwrap();
        assert_eq!(w.at(-1), Letter::C);
        assert_eq!(w.at(4), Letter::B);
        assert_eq!(w.rotate(1).base(), &[Letter::B, Letter::C, Letter::A]);
    }
}
