use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{ends, three, x0_with, ConjectureInstance, A, B, C, D};
use crate::alphabet::{Alphabet, Letter};
use crate::decide::{decide, decide_bounded_period, decide_exact, Certificate, Verdict, WindowGraphConfig};
use crate::error::{invalid, Error, Result};
use crate::periodic::PeriodicWord;
use crate::set::{build_x0, WordSet};
use crate::word::{PartialWord, Symbol};

fn contract(family: &str, at: impl core::fmt::Display) -> Error {
    Error::FamilyContract {
        family: family.into(),
        instance: alloc::format!("{at}"),
    }
}

fn checked(x: &WordSet, w: PeriodicWord, family: &str, at: impl core::fmt::Display) -> Result<PeriodicWord> {
    if w.avoids_set(x)? {
        Ok(w)
    } else {
        Err(contract(family, at))
    }
}

/// `(a^p c^q b^p)^Z` with `p + q = m - 1`, for instances with `x1 <= x2` and
/// `x1 <= y1`.
///
/// The word avoids the set iff `x1+1 <= q <= p <= x2+1` and `q <= y1+1`: the
/// last `q` letters `b` see a `c` at distance `m - 1`, so none of them may see
/// a `b` at distance `y1 + 1`. Takes `q = min(⌊(m-1)/2⌋, y1 + 1)`.
pub fn acb_runs_avoider(inst: ConjectureInstance) -> Result<PeriodicWord> {
    if !acb_runs_applicable(inst) {
        return Err(invalid(alloc::format!(
            "{inst}: needs x1 <= x2 and x1 <= y1"
        )));
    }
    let q = ((inst.m - 1) / 2).min(inst.y1 + 1);
    let p = inst.m - 1 - q;
    let w = PeriodicWord::from_runs(Alphabet::new(3)?, &[(A, p), (C, q), (B, p)])?;
    checked(&inst.set(), w, "acb-runs", inst)
}

pub fn acb_runs_applicable(inst: ConjectureInstance) -> bool {
    inst.x1 <= inst.x2() && inst.x1 <= inst.y1
}

/// An avoider of period at most `m` found by search, when
/// [`super::even_gaps_applicable`] holds.
pub fn even_gaps_certificate(inst: ConjectureInstance) -> Option<Certificate> {
    if !super::even_gaps_applicable(inst) {
        return None;
    }
    match decide_bounded_period(&inst.set(), inst.m) {
        Verdict::Avoidable(c) => Some(c),
        _ => None,
    }
}

/// `X0` over `{a, b, c}` with `a⋄^{m-2}a` replaced by `a⋄^{g0}a⋄^{g1}a ... a`.
///
/// `gaps` lists the hole runs between consecutive `a`s; their sum plus the
/// number of interior `a`s must be `m - 2`.
pub fn top_same_fill_set(m: usize, gaps: &[usize]) -> Result<WordSet> {
    if gaps.is_empty() || gaps.iter().sum::<usize>() + gaps.len() - 1 != m.saturating_sub(2) {
        return Err(invalid(alloc::format!("gaps {gaps:?} do not fit length {m}")));
    }
    let steps: Vec<(usize, Letter)> = gaps.iter().map(|&g| (g, A)).collect();
    x0_with(3, m, &[(ends(A, A, m), PartialWord::gapped(A, &steps))])
}

/// `X0` over `{a, b, c}` with `a⋄^{m-2}a` replaced by `a⋄^{x1}b⋄^{x2}a`.
pub fn top_distinct_fill_set(m: usize, x1: usize) -> Result<WordSet> {
    let x2 = gap_pair(m, x1)?;
    x0_with(3, m, &[(ends(A, A, m), three(A, x1, B, x2, A))])
}

fn gap_pair(m: usize, x1: usize) -> Result<usize> {
    if m < 3 || x1 > m - 3 {
        return Err(invalid(alloc::format!("split x1={x1} is invalid for m={m}")));
    }
    Ok(m - 3 - x1)
}

/// `T3 ∪ T0'`: each of `a⋄a, b⋄b, c⋄c` gets one interior copy of its letter.
pub fn three_top_fills_set(m: usize, x1: usize, y1: usize, z1: usize) -> Result<WordSet> {
    let (x2, y2, z2) = (gap_pair(m, x1)?, gap_pair(m, y1)?, gap_pair(m, z1)?);
    x0_with(
        3,
        m,
        &[
            (ends(A, A, m), three(A, x1, A, x2, A)),
            (ends(B, B, m), three(B, y1, B, y2, B)),
            (ends(C, C, m), three(C, z1, C, z2, C)),
        ],
    )
}

/// Which endpoint letter fills the hole of `a⋄^{m-2}c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AcFill {
    /// `a⋄^{x1}c⋄^{x2}c`
    C,
    /// `a⋄^{x1}a⋄^{x2}c`
    A,
}

pub fn ac_fill_set(m: usize, x1: usize, which: AcFill) -> Result<WordSet> {
    let x2 = gap_pair(m, x1)?;
    let mid = match which {
        AcFill::C => C,
        AcFill::A => A,
    };
    x0_with(3, m, &[(ends(A, C, m), three(A, x1, mid, x2, C))])
}

/// The explicit avoider of [`ac_fill_set`] in the divisible case, `None` otherwise.
///
/// * `C`: when `x1+1 | x2+1`, `(a^{x1+1}b^{x2+1}c^{x1+1}a^{x2+1}b^{x1+1}c^{x2+1})^Z`.
/// * `A`: when `x2+1 | x1+1`, `(a^{x1+1}b^{x2+1}c^{x1+1})^Z`.
pub fn ac_fill_avoider(m: usize, x1: usize, which: AcFill) -> Result<Option<PeriodicWord>> {
    let x2 = gap_pair(m, x1)?;
    let (s, t) = (x1 + 1, x2 + 1);
    let k3 = Alphabet::new(3)?;
    let w = match which {
        AcFill::C if t % s == 0 => {
            PeriodicWord::from_runs(k3, &[(A, s), (B, t), (C, s), (A, t), (B, s), (C, t)])?
        }
        AcFill::A if s % t == 0 => PeriodicWord::from_runs(k3, &[(A, s), (B, t), (C, s)])?,
        _ => return Ok(None),
    };
    let x = ac_fill_set(m, x1, which)?;
    checked(&x, w, "ac-fill", alloc::format!("(m={m}, x1={x1}, {which:?})")).map(Some)
}

/// `X0(k, m)` with `a⋄b -> a⋄^{x1}b⋄^{x2}b` and `c⋄d -> c⋄^{y1}d⋄^{y2}d`.
pub fn disjoint_bottom_set(k: usize, m: usize, x1: usize, y1: usize) -> Result<WordSet> {
    if k < 4 {
        return Err(invalid(alloc::format!("needs 4 letters, got k={k}")));
    }
    let (x2, y2) = (gap_pair(m, x1)?, gap_pair(m, y1)?);
    x0_with(
        k,
        m,
        &[
            (ends(A, B, m), three(A, x1, B, x2, B)),
            (ends(C, D, m), three(C, y1, D, y2, D)),
        ],
    )
}

/// An avoider of [`disjoint_bottom_set`] with period `2(m-1)`.
///
/// If `y1 <= x2`: `(a^p c^q b^p d^q)^Z` with `p = y1+1`, `q = y2+1`.
/// Otherwise `(v_p u_q v̄_p ū_q)^Z` with `v = (a^{x2+1}b^{x2+1})^N`,
/// `u = (c^{y2+1}d^{y2+1})^N`, `p = y2+1`, `q = y1+1`, bars swapping `a↔b`, `c↔d`.
pub fn disjoint_bottom_avoider(k: usize, m: usize, x1: usize, y1: usize) -> Result<PeriodicWord> {
    let x = disjoint_bottom_set(k, m, x1, y1)?;
    let alphabet = x.alphabet();
    let (x2, y2) = (m - 3 - x1, m - 3 - y1);
    let w = if y1 <= x2 {
        PeriodicWord::from_runs(alphabet, &[(A, y1 + 1), (C, y2 + 1), (B, y1 + 1), (D, y2 + 1)])?
    } else {
        let (p, q) = (y2 + 1, y1 + 1);
        let v = |i: usize| if (i / (x2 + 1)) % 2 == 0 { A } else { B };
        let u = |i: usize| if (i / (y2 + 1)) % 2 == 0 { C } else { D };
        let bar = |l: Letter| Letter(l.0 ^ 1);
        let mut base: Vec<Letter> = Vec::with_capacity(2 * (p + q));
        base.extend((0..p).map(v));
        base.extend((0..q).map(u));
        base.extend((0..p).map(|i| bar(v(i))));
        base.extend((0..q).map(|i| bar(u(i))));
        PeriodicWord::new(alphabet, base)?
    };
    checked(&x, w, "disjoint-bottom", alloc::format!("(k={k}, m={m}, x1={x1}, y1={y1})"))
}

/// `X0(k, m)` with `a_i⋄^{m-2}a_{i+p}` strengthened at position `x1 + 1` by
/// `letter`. `i` is 1-based.
pub fn far_endpoints_set(k: usize, m: usize, i: usize, p: usize, x1: usize, letter: Letter) -> Result<WordSet> {
    if i < 1 || p < 2 || i + p > k {
        return Err(invalid(alloc::format!(
            "needs k >= i + p >= i + 2 with i >= 1, got k={k}, i={i}, p={p}"
        )));
    }
    gap_pair(m, x1)?;
    let (lo, hi) = (Letter((i - 1) as u8), Letter((i + p - 1) as u8));
    let old = ends(lo, hi, m);
    let new = old.strengthen(x1 + 1, letter)?;
    let x = x0_with(k, m, &[(old, new)])?;
    Alphabet::new(k)?.contains(letter).then_some(x).ok_or(Error::LetterOutOfRange {
        letter: letter.0,
        size: k as u8,
    })
}

/// Decides [`far_endpoints_set`]; expected to be avoidable.
#[allow(clippy::too_many_arguments)]
pub fn far_endpoints_check(
    k: usize,
    m: usize,
    i: usize,
    p: usize,
    x1: usize,
    letter: Letter,
    max_period: usize,
    cfg: &WindowGraphConfig,
) -> Result<Verdict> {
    let x = far_endpoints_set(k, m, i, p, x1, letter)?;
    Ok(decide(&x, max_period, cfg))
}

/// The two orientation choices of `T0'` over `{a, b, c}` that are avoidable,
/// each with its avoider:
///
/// * `{.., a⋄b, c⋄a, b⋄c}` by `(a^{m-1}c^{m-1}b^{m-1})^Z`,
/// * `{.., b⋄a, a⋄c, c⋄b}` by `(b^{m-1}c^{m-1}a^{m-1})^Z`.
pub fn cyclic_orientation_sets(m: usize) -> Result<[(WordSet, PeriodicWord); 2]> {
    if m < 2 {
        return Err(invalid(alloc::format!("m={m} is below 2")));
    }
    let k3 = Alphabet::new(3)?;
    let t0 = [ends(A, A, m), ends(B, B, m), ends(C, C, m)];
    let set = |pairs: [(Letter, Letter); 3]| {
        WordSet::new(k3, t0.iter().cloned().chain(pairs.iter().map(|&(u, v)| ends(u, v, m))))
    };
    let n = m - 1;
    Ok([
        (
            set([(A, B), (C, A), (B, C)])?,
            PeriodicWord::from_runs(k3, &[(A, n), (C, n), (B, n)])?,
        ),
        (
            set([(B, A), (A, C), (C, B)])?,
            PeriodicWord::from_runs(k3, &[(B, n), (C, n), (A, n)])?,
        ),
    ])
}

/// Result of [`max_fill_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFillReport {
    pub k: usize,
    pub m: usize,
    /// Largest number of filled holes keeping `X0(k, m)` unavoidable.
    pub max_fill: usize,
    /// Unavoidable strengthenings with exactly `i` fills, for each `i`.
    pub per_level: Vec<usize>,
    /// Number of exact decisions made.
    pub decisions: usize,
}

/// Exhaustive search over strengthenings of `X0(k, m)`.
///
/// Weakening preserves unavoidability, so every unavoidable set with `n + 1`
/// fills extends one with `n` fills; the search grows level by level from the
/// unavoidable sets only.
pub fn max_fill_search(k: usize, m: usize, cfg: &WindowGraphConfig) -> Result<MaxFillReport> {
    if m < 3 {
        return Err(invalid(alloc::format!("m={m} is below 3")));
    }
    let x0 = build_x0(k, m)?;
    let words: Vec<PartialWord> = x0.words().to_vec();
    let inner = m - 2;
    let slots = words.len() * inner;
    let alphabet = x0.alphabet();

    let build = |state: &[u8]| -> Result<WordSet> {
        let ws = words.iter().enumerate().map(|(wi, w)| {
            let mut sym: Vec<Symbol> = w.symbols().to_vec();
            for j in 0..inner {
                if let Some(l) = state[wi * inner + j].checked_sub(1) {
                    sym[j + 1] = Symbol::Letter(Letter(l));
                }
            }
            PartialWord::new(sym)
        });
        WordSet::new(alphabet, ws)
    };

    let mut decisions = 0usize;
    let mut level: BTreeSet<Vec<u8>> = BTreeSet::new();
    level.insert(alloc::vec![0u8; slots]);
    if !decide_exact(&x0, cfg)?.is_unavoidable() {
        return Err(invalid(alloc::format!("X0({k}, {m}) is avoidable")));
    }
    decisions += 1;
    let mut per_level = alloc::vec![1usize];
    loop {
        let mut next: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut tried: BTreeSet<Vec<u8>> = BTreeSet::new();
        for state in &level {
            // Only fill slots after the last filled one would miss sets; all
            // slots are tried and duplicates are skipped.
            for s in 0..slots {
                if state[s] != 0 {
                    continue;
                }
                for l in 0..k as u8 {
                    let mut cand = state.clone();
                    cand[s] = l + 1;
                    if !tried.insert(cand.clone()) {
                        continue;
                    }
                    decisions += 1;
                    if decide_exact(&build(&cand)?, cfg)?.is_unavoidable() {
                        next.insert(cand);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        per_level.push(next.len());
        level = next;
    }
    Ok(MaxFillReport {
        k,
        m,
        max_fill: per_level.len() - 1,
        per_level,
        decisions,
    })
}
