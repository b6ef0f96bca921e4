//! Closed-form facts about strengthenings of `X0`.
//!
//! Letters `a, b, c, d` are the first four letters of the alphabet. A "split"
//! `(x1, x2)` with `x1 + x2 = m - 3` places one interior letter in a word of
//! length `m`: `u⋄^{x1}v⋄^{x2}w`.

use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::Letter;
#[cfg(test)]
use crate::alphabet::Alphabet;
use crate::error::{invalid, Result};
use crate::set::{build_x0, WordSet};
use crate::word::PartialWord;

mod claims;
mod constructions;

pub use claims::*;
pub use constructions::*;

const A: Letter = Letter::A;
const B: Letter = Letter::B;
const C: Letter = Letter::C;
const D: Letter = Letter::D;

/// `q = ν_p(n)`: `p^q` divides `n` and `p^{q+1}` does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Valuation {
    pub p: u64,
    pub n: u64,
    pub q: u32,
}

impl Valuation {
    pub fn new(p: u64, n: u64) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(invalid(alloc::format!("{p} is not a prime")));
        }
        if n < 1 {
            return Err(invalid("valuation of 0 is undefined"));
        }
        let mut q = 0;
        let mut r = n;
        while r % p == 0 {
            r /= p;
            q += 1;
        }
        Ok(Valuation { p, n, q })
    }
}

/// The `p`-adic valuation of `n`.
pub fn nu(p: u64, n: u64) -> Result<u32> {
    Valuation::new(p, n).map(|v| v.q)
}

/// `ν_2(n)` for `n >= 1`.
#[inline]
pub fn nu2(n: usize) -> u32 {
    debug_assert!(n >= 1);
    n.trailing_zeros()
}

/// `k + C(k, 2)`: the smallest size of a non-trivial unavoidable m-uniform set.
pub fn min_size_bound(k: usize) -> usize {
    k + k * k.saturating_sub(1) / 2
}

fn check_split(m: usize, x1: usize, name: &str) -> Result<()> {
    if m < 3 {
        return Err(invalid(alloc::format!("m={m} is below 3")));
    }
    if x1 > m - 3 {
        return Err(invalid(alloc::format!("{name}={x1} exceeds m - 3 = {}", m - 3)));
    }
    Ok(())
}

/// `(X0(k, m) \ {removed}) ∪ {added}`, each addition taking the slot of the
/// word it replaces.
pub(crate) fn x0_with(k: usize, m: usize, swaps: &[(PartialWord, PartialWord)]) -> Result<WordSet> {
    let mut x = build_x0(k, m)?;
    for (old, new) in swaps {
        x = x.replace(old, [new.clone()])?;
    }
    Ok(x)
}

/// `u⋄^{m-2}v`.
pub(crate) fn ends(u: Letter, v: Letter, m: usize) -> PartialWord {
    PartialWord::gapped(u, &[(m - 2, v)])
}

/// `u⋄^{g1}v⋄^{g2}w`.
pub(crate) fn three(u: Letter, g1: usize, v: Letter, g2: usize, w: Letter) -> PartialWord {
    PartialWord::gapped(u, &[(g1, v), (g2, w)])
}

#[cfg(test)]
fn ternary() -> Alphabet {
    Alphabet::new(3).expect("3 letters")
}

/// Parameters of `X2 = T0 ∪ {a⋄^{x1}b⋄^{x2}b, b⋄^{y1}b⋄^{y2}c, a⋄^{m-2}c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConjectureInstance {
    pub m: usize,
    pub x1: usize,
    pub y1: usize,
}

impl ConjectureInstance {
    pub fn new(m: usize, x1: usize, y1: usize) -> Result<Self> {
        check_split(m, x1, "x1")?;
        check_split(m, y1, "y1")?;
        Ok(ConjectureInstance { m, x1, y1 })
    }

    #[inline]
    pub fn x2(&self) -> usize {
        self.m - 3 - self.x1
    }

    #[inline]
    pub fn y2(&self) -> usize {
        self.m - 3 - self.y1
    }

    /// `y1 <= x2 <= x1 <= y2`.
    pub fn in_conjecture_region(&self) -> bool {
        self.y1 <= self.x2() && self.x2() <= self.x1 && self.x1 <= self.y2()
    }

    /// The six-word set over `{a, b, c}`, in the order
    /// `a⋄a, b⋄b, c⋄c, a⋄b⋄b, a⋄c, b⋄b⋄c`.
    pub fn set(&self) -> WordSet {
        let m = self.m;
        x0_with(
            3,
            m,
            &[
                (ends(A, B, m), three(A, self.x1, B, self.x2(), B)),
                (ends(B, C, m), three(B, self.y1, B, self.y2(), C)),
            ],
        )
        .expect("validated parameters")
    }
}

impl fmt::Display for ConjectureInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, x1={}, y1={})", self.m, self.x1, self.y1)
    }
}

/// Parameters of `X2 = (X0 \ {a⋄a, b⋄c}) ∪ {a⋄^{x1}a⋄^{x2}a, b⋄^{y1}c⋄^{y2}c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopBottomInstance {
    pub m: usize,
    pub x1: usize,
    pub y1: usize,
}

impl TopBottomInstance {
    pub fn new(m: usize, x1: usize, y1: usize) -> Result<Self> {
        check_split(m, x1, "x1")?;
        check_split(m, y1, "y1")?;
        Ok(TopBottomInstance { m, x1, y1 })
    }

    #[inline]
    pub fn x2(&self) -> usize {
        self.m - 3 - self.x1
    }

    #[inline]
    pub fn y2(&self) -> usize {
        self.m - 3 - self.y1
    }

    pub fn set(&self) -> WordSet {
        let m = self.m;
        x0_with(
            3,
            m,
            &[
                (ends(A, A, m), three(A, self.x1, A, self.x2(), A)),
                (ends(B, C, m), three(B, self.y1, C, self.y2(), C)),
            ],
        )
        .expect("validated parameters")
    }

    /// `X2'` with the `a`-word's gaps swapped; same avoidability as `X2`.
    pub fn mirrored_set(&self) -> WordSet {
        TopBottomInstance {
            m: self.m,
            x1: self.x2(),
            y1: self.y1,
        }
        .set()
    }

    /// `(X0 \ {a⋄a, b⋄c}) ∪ {a⋄^{x1}a⋄^{x2}a, b⋄^{y2}b⋄^{y1}c}`.
    pub fn primed_set(&self) -> WordSet {
        let m = self.m;
        x0_with(
            3,
            m,
            &[
                (ends(A, A, m), three(A, self.x1, A, self.x2(), A)),
                (ends(B, C, m), three(B, self.y2(), B, self.y1, C)),
            ],
        )
        .expect("validated parameters")
    }
}

impl fmt::Display for TopBottomInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, x1={}, y1={})", self.m, self.x1, self.y1)
    }
}

/// The conjecture-region set family; see [`ConjectureInstance::set`].
pub fn conjecture_set(m: usize, x1: usize, y1: usize) -> Result<WordSet> {
    Ok(ConjectureInstance::new(m, x1, y1)?.set())
}

/// The top-bottom set family; see [`TopBottomInstance::set`].
pub fn top_bottom_set(m: usize, x1: usize, y1: usize) -> Result<WordSet> {
    Ok(TopBottomInstance::new(m, x1, y1)?.set())
}

/// Every `(m, x1, y1)` with `0 <= y1 <= x2 <= x1 <= y2`, ordered by `(m, x1, y1)`.
pub fn conjecture_region(m_lo: usize, m_hi: usize) -> Result<Vec<ConjectureInstance>> {
    if m_lo < 3 || m_lo > m_hi {
        return Err(invalid(alloc::format!("bad m range {m_lo}..={m_hi}")));
    }
    let mut out = Vec::new();
    for m in m_lo..=m_hi {
        let n = m - 3;
        for x1 in n.div_ceil(2)..=n {
            for y1 in 0..=n - x1 {
                let inst = ConjectureInstance { m, x1, y1 };
                if inst.in_conjecture_region() {
                    out.push(inst);
                }
            }
        }
    }
    Ok(out)
}

/// Number of region instances with `m_lo <= m <= m_hi`, in closed form.
pub fn conjecture_region_count(m_lo: usize, m_hi: usize) -> u64 {
    // For fixed m, x1 runs over ceil(n/2)..=n and y1 over 0..=n-x1.
    (m_lo.max(3)..=m_hi)
        .map(|m| {
            let n = (m - 3) as u64;
            let lo = n.div_ceil(2);
            (lo..=n).map(|x1| n - x1 + 1).sum::<u64>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(nu(2, 8).unwrap(), 3);
        assert_eq!(nu(2, 7).unwrap(), 0);
        assert_eq!(nu(3, 18).unwrap(), 2);
        assert!(nu(1, 5).is_err());
        assert!(nu(4, 5).is_err());
        assert!(nu(2, 0).is_err());
        assert_eq!(nu2(12), 2);
    }

    #[test]
    fn size_bound() {
        assert_eq!(min_size_bound(1), 1);
        assert_eq!(min_size_bound(2), 3);
        assert_eq!(min_size_bound(3), 6);
    }

    #[test]
    fn instance_sets() {
        let i = ConjectureInstance::new(12, 6, 3).unwrap();
        assert!(i.in_conjecture_region());
        let s = i.set();
        assert_eq!(s.len(), 6);
        assert_eq!(s.uniform_length(), Some(12));
        assert!(s.contains(&"a------b---b".parse().unwrap()));
        assert!(s.contains(&"b---b------c".parse().unwrap()));
        assert!(ConjectureInstance::new(5, 9, 0).is_err());
        let e = TopBottomInstance::new(5, 0, 1).unwrap();
        assert_eq!(
            e.set(),
            WordSet::parse(ternary(), "aa--a b---b c---c a---b a---c b-c-c").unwrap()
        );
    }

    #[test]
    fn region_counts() {
        assert_eq!(conjecture_region(4, 4).unwrap().len(), 1);
        assert_eq!(conjecture_region(3, 100).unwrap().len(), 41_650);
        assert_eq!(conjecture_region_count(3, 100), 41_650);
        assert_eq!(conjecture_region_count(4, 100), 41_649);
        for m in 3..30 {
            assert_eq!(conjecture_region(m, m).unwrap().len() as u64, conjecture_region_count(m, m));
        }
    }
}
