//! Set operations that preserve avoidability.
//!
//! Each operation returns a new set together with a [`ReductionTrace`] that
//! replays the change step by step.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{invalid, Error, Result};
use crate::set::WordSet;
use crate::word::{PartialWord, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    Factoring,
    PrefixSuffix,
    HoleTruncation,
    Expansion,
}

impl Operation {
    pub fn name(self) -> &'static str {
        match self {
            Operation::Factoring => "factoring",
            Operation::PrefixSuffix => "prefix-suffix",
            Operation::HoleTruncation => "hole-truncation",
            Operation::Expansion => "expansion",
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One replacement `(X \ {removed}) ∪ added`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub op: Operation,
    pub removed: PartialWord,
    pub added: Vec<PartialWord>,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: -{}", self.op, self.removed)?;
        for w in &self.added {
            write!(f, " +{w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
}

impl ReductionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn extend(&mut self, other: ReductionTrace) {
        self.steps.extend(other.steps);
    }

    /// Applies every step to `x` in order.
    pub fn replay(&self, x: &WordSet) -> Result<WordSet> {
        let mut cur = x.clone();
        for s in &self.steps {
            cur = cur.replace(&s.removed, s.added.iter().cloned())?;
        }
        Ok(cur)
    }

    fn push(&mut self, op: Operation, removed: PartialWord, added: Vec<PartialWord>) {
        self.steps.push(Step { op, removed, added });
    }
}

/// Removes, until none is left, a word `x` such that another member is a
/// weakening of a factor of `x`. Words are scanned in set order.
pub fn factoring(x: &WordSet) -> (WordSet, ReductionTrace) {
    let mut cur = x.clone();
    let mut trace = ReductionTrace::new();
    while let Some(victim) = cur
        .iter()
        .find(|w| cur.iter().any(|y| y != *w && y.weakens_factor_of(w)))
        .cloned()
    {
        cur = cur.remove(&victim).expect("victim is a member and another word remains");
        trace.push(Operation::Factoring, victim, Vec::new());
    }
    (cur, trace)
}

/// How the witness `v ∈ X` of the prefix-suffix rule is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessRule {
    /// `v` ranges over all of `X`, including the word being shortened.
    #[default]
    Literal,
    /// `v` must differ from the word being shortened.
    Strict,
}

/// For `x = y·a ∈ X`: if every letter `b` has a suffix `z` of `y` and a member
/// `v` that is a weakening of `z·b`, returns `(X \ {x}) ∪ {y}`.
pub fn prefix_suffix(
    x_set: &WordSet,
    x: &PartialWord,
    rule: WitnessRule,
) -> Result<(WordSet, ReductionTrace)> {
    if !x_set.contains(x) {
        return Err(Error::NotAMember(alloc::format!("{x}")));
    }
    let y = prefix_suffix_target(x_set, x, rule)?;
    let out = x_set.replace(x, [y.clone()])?;
    let mut trace = ReductionTrace::new();
    trace.push(Operation::PrefixSuffix, x.clone(), alloc::vec![y]);
    Ok((out, trace))
}

/// Checks the prefix-suffix condition for `x` and returns `y`.
fn prefix_suffix_target(x_set: &WordSet, x: &PartialWord, rule: WitnessRule) -> Result<PartialWord> {
    let Some(Symbol::Letter(_)) = x.last() else {
        return Err(Error::PrefixSuffix(alloc::format!("{x} does not end in a letter")));
    };
    let y = x.slice(0, x.len() - 1);
    for b in x_set.alphabet().letters() {
        if witness(x_set, x, &y, b, rule).is_none() {
            return Err(Error::PrefixSuffix(alloc::format!(
                "no suffix z of {y} and member v weakening z{b}"
            )));
        }
    }
    Ok(y)
}

/// Longest suffix first; returns `(|z|, v)`.
fn witness<'a>(
    x_set: &'a WordSet,
    x: &PartialWord,
    y: &PartialWord,
    b: Letter,
    rule: WitnessRule,
) -> Option<(usize, &'a PartialWord)> {
    (0..=y.len()).rev().find_map(|zlen| {
        let mut zb = y.slice(y.len() - zlen, y.len());
        zb.push(Symbol::Letter(b));
        x_set
            .iter()
            .filter(|v| rule == WitnessRule::Literal || *v != x)
            .find(|v| v.is_weakening_of(&zb))
            .map(|v| (zlen, v))
    })
}

/// Applies [`prefix_suffix`] to the first applicable member, repeatedly.
///
/// Terminates because every step shortens one word.
pub fn prefix_suffix_all(x: &WordSet, rule: WitnessRule) -> (WordSet, ReductionTrace) {
    let mut cur = x.clone();
    let mut trace = ReductionTrace::new();
    loop {
        let next = cur.iter().find_map(|w| {
            prefix_suffix_target(&cur, w, rule)
                .ok()
                .map(|y| (w.clone(), y))
        });
        let Some((w, y)) = next else {
            return (cur, trace);
        };
        cur = cur.replace(&w, [y.clone()]).expect("w is a member");
        trace.push(Operation::PrefixSuffix, w, alloc::vec![y]);
    }
}

/// Strips trailing hole blocks, and leading ones by the mirror-image rule.
pub fn hole_truncation(x: &WordSet) -> (WordSet, ReductionTrace) {
    let mut cur = x.clone();
    let mut trace = ReductionTrace::new();
    while let Some((w, t)) = cur.iter().find_map(|w| {
        let t = trim_holes(w);
        (t != *w).then(|| (w.clone(), t))
    }) {
        cur = cur.replace(&w, [t.clone()]).expect("w is a member");
        trace.push(Operation::HoleTruncation, w, alloc::vec![t]);
    }
    (cur, trace)
}

fn trim_holes(w: &PartialWord) -> PartialWord {
    let s = w.symbols();
    let start = s.iter().position(|c| !c.is_hole()).unwrap_or(s.len());
    let end = s.iter().rposition(|c| !c.is_hole()).map_or(start, |e| e + 1);
    w.slice(start, end)
}

/// Replaces `x` by every filling of the holes at `positions`.
///
/// Fillings are listed in lexicographic order, the first position varying slowest.
pub fn expand(x_set: &WordSet, x: &PartialWord, positions: &[usize]) -> Result<(WordSet, ReductionTrace)> {
    if !x_set.contains(x) {
        return Err(Error::NotAMember(alloc::format!("{x}")));
    }
    let mut pos: Vec<usize> = positions.to_vec();
    pos.sort_unstable();
    pos.dedup();
    for &p in &pos {
        match x.get(p) {
            None => return Err(Error::PositionOutOfRange { pos: p, len: x.len() }),
            Some(Symbol::Letter(_)) => return Err(Error::NotAHole(p)),
            Some(Symbol::Hole) => {}
        }
    }
    let added = fillings(x, &pos, x_set.alphabet());
    let out = x_set.replace(x, added.iter().cloned())?;
    let mut trace = ReductionTrace::new();
    trace.push(Operation::Expansion, x.clone(), added);
    Ok((out, trace))
}

fn fillings(x: &PartialWord, pos: &[usize], alphabet: Alphabet) -> Vec<PartialWord> {
    let mut out = alloc::vec![x.clone()];
    for &p in pos {
        out = out
            .iter()
            .flat_map(|w| {
                alphabet
                    .letters()
                    .map(move |l| w.strengthen(p, l).expect("position checked to be a hole"))
            })
            .collect();
    }
    out
}

/// The mixed-length set with the same avoidability as the top-bottom set
/// ([`crate::theory::TopBottomInstance`]) when `y1 = y2 = y` and `m = 2y + 3`:
///
/// `{a⋄^{x1}a, b⋄^y b, b⋄^y c, c⋄^y b, c⋄^y c, a⋄^y a⋄^y b, a⋄^y a⋄^y c,
///   b⋄^y a⋄^y b, c⋄^y a⋄^y c}` over `{a, b, c}`.
pub fn equal_tail_reduced_set(m: usize, x1: usize, y: usize) -> Result<WordSet> {
    if m != 2 * y + 3 {
        return Err(invalid(alloc::format!("need m = 2y + 3, got m={m}, y={y}")));
    }
    if x1 > m - 3 {
        return Err(invalid(alloc::format!("x1={x1} exceeds m - 3 = {}", m - 3)));
    }
    let (a, b, c) = (Letter::A, Letter::B, Letter::C);
    let g = PartialWord::gapped;
    let words = [
        g(a, &[(x1, a)]),
        g(b, &[(y, b)]),
        g(b, &[(y, c)]),
        g(c, &[(y, b)]),
        g(c, &[(y, c)]),
        g(a, &[(y, a), (y, b)]),
        g(a, &[(y, a), (y, c)]),
        g(b, &[(y, a), (y, b)]),
        g(c, &[(y, a), (y, c)]),
    ];
    WordSet::new(Alphabet::new(3)?, words)
}

/// Parses an operation name as printed by [`Operation::name`].
pub fn parse_operation(s: &str) -> Result<Operation> {
    match s {
        "factoring" => Ok(Operation::Factoring),
        "prefix-suffix" => Ok(Operation::PrefixSuffix),
        "hole-truncation" => Ok(Operation::HoleTruncation),
        "expansion" | "expand" => Ok(Operation::Expansion),
        _ => Err(invalid(String::from("unknown operation ") + s)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    fn w(s: &str) -> PartialWord {
        s.parse().unwrap()
    }

    #[test]
    fn factoring_examples() {
        let x = WordSet::parse(k(2), "abba -b").unwrap();
        let (y, t) = factoring(&x);
        assert_eq!(y, WordSet::parse(k(2), "-b").unwrap());
        assert_eq!(t.replay(&x).unwrap(), y);
        let x = WordSet::parse(k(2), "a--a b--b").unwrap();
        assert_eq!(factoring(&x).0, x);
        assert!(factoring(&x).1.is_empty());
    }

    #[test]
    fn prefix_suffix_examples() {
        let x = WordSet::parse(k(2), "abb -a -b").unwrap();
        let (y, t) = prefix_suffix(&x, &w("abb"), WitnessRule::Literal).unwrap();
        assert_eq!(y, WordSet::parse(k(2), "ab -a -b").unwrap());
        assert_eq!(t.replay(&x).unwrap(), y);
        assert!(matches!(
            prefix_suffix(&x, &w("-a"), WitnessRule::Strict),
            Err(Error::PrefixSuffix(_))
        ));
        assert!(prefix_suffix(&x, &w("aa"), WitnessRule::Literal).is_err());
    }

    #[test]
    fn literal_rule_lets_x_witness_its_own_letter() {
        // For b = a only x itself weakens y·a.
        let x = WordSet::parse(k(2), "aa -b").unwrap();
        assert!(prefix_suffix(&x, &w("aa"), WitnessRule::Literal).is_ok());
        assert!(prefix_suffix(&x, &w("aa"), WitnessRule::Strict).is_err());
    }

    #[test]
    fn hole_truncation_examples() {
        let x = WordSet::parse(k(3), "ab-- c").unwrap();
        let (y, t) = hole_truncation(&x);
        assert_eq!(y, WordSet::parse(k(3), "ab c").unwrap());
        assert_eq!(t.len(), 1);
        let x = WordSet::parse(k(2), "a-b").unwrap();
        assert_eq!(hole_truncation(&x).0, x);
        let x = WordSet::parse(k(2), "--a-b-").unwrap();
        assert_eq!(hole_truncation(&x).0, WordSet::parse(k(2), "a-b").unwrap());
    }

    #[test]
    fn expand_examples() {
        let x = WordSet::parse(k(2), "a-b").unwrap();
        let (y, _) = expand(&x, &w("a-b"), &[1]).unwrap();
        assert_eq!(y, WordSet::parse(k(2), "aab abb").unwrap());
        let x3 = x.widen(k(3)).unwrap();
        assert_eq!(expand(&x3, &w("a-b"), &[1]).unwrap().0.len(), 3);
        assert_eq!(expand(&x, &w("a-b"), &[0]).unwrap_err(), Error::NotAHole(0));
        let x = WordSet::parse(k(2), "a--b").unwrap();
        let (y, _) = expand(&x, &w("a--b"), &[2, 1]).unwrap();
        assert_eq!(y.words()[0].to_string(), "aaab");
        assert_eq!(y.words()[1].to_string(), "aabb");
        assert_eq!(y.len(), 4);
    }

    #[test]
    fn derived_set_shape() {
        let y = equal_tail_reduced_set(5, 0, 1).unwrap();
        assert_eq!(y.len(), 9);
        let mut lens: Vec<usize> = y.iter().map(PartialWord::len).collect();
        lens.sort_unstable();
        lens.dedup();
        assert_eq!(lens, [2, 3, 5]);
        assert!(equal_tail_reduced_set(6, 0, 1).is_err());
        assert!(equal_tail_reduced_set(5, 3, 1).is_err());
    }
}
