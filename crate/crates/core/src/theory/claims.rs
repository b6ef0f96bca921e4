use core::fmt;

use super::{ends, nu2, three, x0_with, ConjectureInstance, A, B, C};
use crate::alphabet::Alphabet;
use crate::error::{invalid, Result};
use crate::set::WordSet;
use crate::word::PartialWord;

/// What a one-directional statement says about a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Avoidable,
    Unavoidable,
    /// The hypothesis fails; nothing is asserted.
    NoClaim,
}

fn split(m: usize, x1: usize) -> Result<usize> {
    if m < 3 || x1 > m - 3 {
        return Err(invalid(alloc::format!("split x1={x1} is invalid for m={m}")));
    }
    Ok(m - 3 - x1)
}

/// `(X0 \ {a⋄a, b⋄b}) ∪ {a⋄^{x1}a⋄^{x2}a, b⋄^{y1}b⋄^{y2}b}` over `{a, b, c}`.
pub fn same_fills_set(m: usize, x1: usize, y1: usize) -> Result<WordSet> {
    let x2 = split(m, x1)?;
    let y2 = split(m, y1)?;
    x0_with(
        3,
        m,
        &[
            (ends(A, A, m), three(A, x1, A, x2, A)),
            (ends(B, B, m), three(B, y1, B, y2, B)),
        ],
    )
}

/// Avoidable iff `m` is odd and `r = s < t`, where `2^r ‖ x1+1`, `2^s ‖ y1+1`,
/// `2^t ‖ m-1`.
pub fn same_fills_avoidable(m: usize, x1: usize, y1: usize) -> Result<bool> {
    split(m, x1)?;
    split(m, y1)?;
    let (r, s, t) = (nu2(x1 + 1), nu2(y1 + 1), nu2(m - 1));
    Ok(m % 2 == 1 && r == s && r < t)
}

/// The four single-fill strengthenings of `a⋄b` or `b⋄c` by an endpoint letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndpointFill {
    /// `a⋄^{x1}b⋄^{x2}b` replaces `a⋄b`.
    AbFillB = 1,
    /// `a⋄^{x1}a⋄^{x2}b` replaces `a⋄b`.
    AbFillA = 2,
    /// `b⋄^{x1}b⋄^{x2}c` replaces `b⋄c`.
    BcFillB = 3,
    /// `b⋄^{x1}c⋄^{x2}c` replaces `b⋄c`.
    BcFillC = 4,
}

impl EndpointFill {
    pub const ALL: [EndpointFill; 4] = [
        EndpointFill::AbFillB,
        EndpointFill::AbFillA,
        EndpointFill::BcFillB,
        EndpointFill::BcFillC,
    ];

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            1 => Ok(EndpointFill::AbFillB),
            2 => Ok(EndpointFill::AbFillA),
            3 => Ok(EndpointFill::BcFillB),
            4 => Ok(EndpointFill::BcFillC),
            _ => Err(invalid(alloc::format!("case {id} is not in 1..=4"))),
        }
    }

    pub fn id(self) -> u8 {
        self as u8
    }

    /// The gap whose valuation is compared: `x1` in cases 1 and 4, `x2` in 2 and 3.
    pub fn relevant_split(self, x1: usize, x2: usize) -> usize {
        match self {
            EndpointFill::AbFillB | EndpointFill::BcFillC => x1,
            EndpointFill::AbFillA | EndpointFill::BcFillB => x2,
        }
    }

    pub fn set(self, m: usize, x1: usize) -> Result<WordSet> {
        let x2 = split(m, x1)?;
        let (old, new) = match self {
            EndpointFill::AbFillB => (ends(A, B, m), three(A, x1, B, x2, B)),
            EndpointFill::AbFillA => (ends(A, B, m), three(A, x1, A, x2, B)),
            EndpointFill::BcFillB => (ends(B, C, m), three(B, x1, B, x2, C)),
            EndpointFill::BcFillC => (ends(B, C, m), three(B, x1, C, x2, C)),
        };
        x0_with(3, m, &[(old, new)])
    }
}

impl fmt::Display for EndpointFill {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.id())
    }
}

/// Unavoidable iff `ν2(x+1) <= ν2(m-1)`, `x` being the case's relevant gap.
pub fn endpoint_fill_unavoidable(case: u8, m: usize, x: usize) -> Result<bool> {
    EndpointFill::from_id(case)?;
    split(m, x)?;
    Ok(nu2(x + 1) <= nu2(m - 1))
}

/// `{a⋄^{m-2}a, b⋄^{m-2}b, a⋄^{x1}b⋄^{x2}b⋄^{x3}b}` over `{a, b}`.
pub fn binary_two_fill_set(m: usize, x1: usize, x2: usize, x3: usize) -> Result<WordSet> {
    check_three_gaps(m, x1, x2, x3)?;
    let x = PartialWord::gapped(A, &[(x1, B), (x2, B), (x3, B)]);
    WordSet::new(Alphabet::new(2)?, [ends(A, A, m), ends(B, B, m), x])
}

fn check_three_gaps(m: usize, x1: usize, x2: usize, x3: usize) -> Result<()> {
    if m < 4 || x1 + x2 + x3 != m - 4 {
        return Err(invalid(alloc::format!(
            "gaps {x1}+{x2}+{x3} must sum to m - 4 for m={m}"
        )));
    }
    Ok(())
}

/// With `2^s ‖ m-1`, `2^t ‖ x1+1`, `2^r ‖ x1+x2+2`: unavoidable iff `s >= t, r`
/// and one of `x1 = x2`, `x1 = x3`, or `m = 7(x1+1)+1` with
/// `x2+1 ∈ {2(x1+1), 4(x1+1)}`.
pub fn binary_two_fill_unavoidable(m: usize, x1: usize, x2: usize, x3: usize) -> Result<bool> {
    check_three_gaps(m, x1, x2, x3)?;
    let s = nu2(m - 1);
    let t = nu2(x1 + 1);
    let r = nu2(x1 + x2 + 2);
    let shape = x1 == x2
        || x1 == x3
        || (m == 7 * (x1 + 1) + 1 && (x2 + 1 == 2 * (x1 + 1) || x2 + 1 == 4 * (x1 + 1)));
    Ok(s >= t && s >= r && shape)
}

/// `(x1, x2, y1, y2) -> (y2, y1, x2, x1)`: the instance whose set is
/// `T0 ∪ {a⋄^{y2}b⋄^{y1}b, b⋄^{x2}b⋄^{x1}c, a⋄^{m-2}c}`. An involution.
pub fn gap_swap_partner(inst: ConjectureInstance) -> ConjectureInstance {
    ConjectureInstance {
        m: inst.m,
        x1: inst.y2(),
        y1: inst.x2(),
    }
}

/// The partner set written out directly from the original gaps.
pub fn gap_swap_set(inst: ConjectureInstance) -> WordSet {
    let m = inst.m;
    x0_with(
        3,
        m,
        &[
            (ends(A, B, m), three(A, inst.y2(), B, inst.y1, B)),
            (ends(B, C, m), three(B, inst.x2(), B, inst.x1, C)),
        ],
    )
    .expect("validated instance")
}

/// Either `x1, y1` even with `y1 <= x2 <= x1`, or `y1 = 0` with `x2 <= x1`.
/// Then some word of period at most `m` avoids the set.
pub fn even_gaps_applicable(inst: ConjectureInstance) -> bool {
    let x2 = inst.x2();
    (inst.x1 % 2 == 0 && inst.y1 % 2 == 0 && inst.y1 <= x2 && x2 <= inst.x1)
        || (inst.y1 == 0 && x2 <= inst.x1)
}

/// For the top-bottom set with `y1 = y2 = y` (so `m = 2y + 3`): `ν2(x1+1) ≠ ν2(y+1)`
/// implies unavoidable. `false` makes no claim.
pub fn equal_tail_unavoidable(m: usize, x1: usize, y: usize) -> Result<bool> {
    if m != 2 * y + 3 {
        return Err(invalid(alloc::format!("need m = 2y + 3, got m={m}, y={y}")));
    }
    split(m, x1)?;
    Ok(nu2(x1 + 1) != nu2(y + 1))
}

/// [`equal_tail_unavoidable`] as a [`Claim`].
pub fn equal_tail_claim(m: usize, x1: usize, y: usize) -> Result<Claim> {
    Ok(if equal_tail_unavoidable(m, x1, y)? {
        Claim::Unavoidable
    } else {
        Claim::NoClaim
    })
}

/// Most holes that can be filled in `X0` keeping it unavoidable:
/// `m - 1` for even `m`, `m` for odd `m`.
pub fn max_fill(m: usize) -> Result<usize> {
    if m < 4 {
        return Err(invalid(alloc::format!("m={m} is below 4")));
    }
    Ok(if m % 2 == 0 { m - 1 } else { m })
}

/// `H^k_{m, k + C(k,2)}`, valid for `k >= 3` only under the avoidability
/// conjecture for the conjecture-region sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoleBound {
    pub k: usize,
    pub m: usize,
    pub value: usize,
    pub max_fill: usize,
    pub conditional: bool,
}

impl fmt::Display for HoleBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H = {}", self.value)?;
        if self.conditional {
            f.write_str(" (conditional on the conjecture-region conjecture)")?;
        }
        write!(f, ", max_fill = {}", self.max_fill)
    }
}

/// `(k + C(k,2))(m - 2) - max_fill(m)`.
pub fn min_holes(k: usize, m: usize) -> Result<HoleBound> {
    if k < 2 {
        return Err(invalid(alloc::format!("k={k} is below 2")));
    }
    let fill = max_fill(m)?;
    Ok(HoleBound {
        k,
        m,
        value: super::min_size_bound(k) * (m - 2) - fill,
        max_fill: fill,
        conditional: k >= 3,
    })
}

/// The four sets compared when two `T0'` words sharing `b` are strengthened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchSets {
    /// `{a⋄^{x1}b⋄^{x2}b, b⋄^{y1}b⋄^{y2}c}`
    pub x2: WordSet,
    /// `{a⋄^{x2}a⋄^{x1}b, b⋄^{y1}b⋄^{y2}c}`
    pub x2_prime: WordSet,
    /// `{a⋄^{y2}a⋄^{y1}b, b⋄^{x1}c⋄^{x2}c}`
    pub y2_prime: WordSet,
    /// `{a⋄^{y1}b⋄^{y2}b, b⋄^{x1}c⋄^{x2}c}`
    pub y2: WordSet,
}

/// Builds [`SwitchSets`]. Avoidability flows `x2 ⇒ x2_prime ⇔ y2_prime ⇒ y2`.
pub fn switch_sets(m: usize, x1: usize, y1: usize) -> Result<SwitchSets> {
    let x2 = split(m, x1)?;
    let y2 = split(m, y1)?;
    let with = |u: PartialWord, v: PartialWord| {
        x0_with(3, m, &[(ends(A, B, m), u), (ends(B, C, m), v)])
    };
    Ok(SwitchSets {
        x2: with(three(A, x1, B, x2, B), three(B, y1, B, y2, C))?,
        x2_prime: with(three(A, x2, A, x1, B), three(B, y1, B, y2, C))?,
        y2_prime: with(three(A, y2, A, y1, B), three(B, x1, C, x2, C))?,
        y2: with(three(A, y1, B, y2, B), three(B, x1, C, x2, C))?,
    })
}

/// `{a⋄^{m-2}a, b⋄^{m-2}b, x}` over `{a, b}`, where `x` is `a⋄^{m-2}b` with the
/// given interior positions filled.
pub fn binary_fill_set(m: usize, fills: &[(usize, crate::Letter)]) -> Result<WordSet> {
    let mut x = ends(A, B, m);
    for &(pos, l) in fills {
        if pos == 0 || pos >= m - 1 {
            return Err(invalid(alloc::format!("position {pos} is not interior")));
        }
        x = x.strengthen(pos, l)?;
    }
    WordSet::new(Alphabet::new(2)?, [ends(A, A, m), ends(B, B, m), x])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop3_examples() {
        assert!(same_fills_avoidable(9, 1, 1).unwrap());
        assert!(!same_fills_avoidable(8, 1, 1).unwrap());
        assert!(!same_fills_avoidable(9, 1, 3).unwrap());
    }

    #[test]
    fn harder_examples() {
        assert!(endpoint_fill_unavoidable(1, 9, 3).unwrap());
        assert!(!endpoint_fill_unavoidable(1, 8, 3).unwrap());
        assert!(endpoint_fill_unavoidable(3, 5, 1).unwrap());
        assert!(endpoint_fill_unavoidable(5, 5, 1).is_err());
    }

    #[test]
    fn two_bottom_examples() {
        assert!(!binary_two_fill_unavoidable(8, 1, 1, 2).unwrap());
        assert!(binary_two_fill_unavoidable(9, 1, 1, 3).unwrap());
        assert!(binary_two_fill_unavoidable(15, 1, 3, 7).unwrap());
        assert!(binary_two_fill_unavoidable(15, 1, 3, 8).is_err());
    }

    #[test]
    fn partner_is_an_involution() {
        let i = ConjectureInstance::new(7, 1, 2).unwrap();
        let p = gap_swap_partner(i);
        assert_eq!((p.m, p.x1, p.y1), (7, 2, 3));
        assert_eq!(gap_swap_partner(p), i);
        assert_eq!(p.set(), gap_swap_set(i));
    }

    #[test]
    fn eveneven_examples() {
        let i = |m, x1, y1| ConjectureInstance::new(m, x1, y1).unwrap();
        assert!(even_gaps_applicable(i(9, 4, 2)));
        assert!(even_gaps_applicable(i(8, 3, 0)));
        assert!(!even_gaps_applicable(i(9, 3, 2)));
    }

    #[test]
    fn iff_examples() {
        assert!(equal_tail_unavoidable(5, 0, 1).unwrap());
        assert!(!equal_tail_unavoidable(5, 1, 1).unwrap());
        assert!(equal_tail_unavoidable(9, 1, 3).unwrap());
        assert!(equal_tail_unavoidable(8, 1, 3).is_err());
        assert_eq!(equal_tail_claim(5, 1, 1).unwrap(), Claim::NoClaim);
    }

    #[test]
    fn hole_bounds() {
        assert_eq!(min_holes(2, 6).unwrap().value, 7);
        assert_eq!(min_holes(2, 5).unwrap().value, 4);
        let h = min_holes(3, 7).unwrap();
        assert_eq!(h.value, 23);
        assert_eq!(
            alloc::format!("{h}"),
            "H = 23 (conditional on the conjecture-region conjecture), max_fill = 7"
        );
        assert!(max_fill(3).is_err());
        for m in 4..=100 {
            let f = max_fill(m).unwrap();
            assert_eq!(f, if m % 2 == 0 { m - 1 } else { m });
            assert_eq!(min_holes(2, m).unwrap().value, if m % 2 == 0 { 2 * m - 5 } else { 2 * m - 6 });
        }
    }
}
