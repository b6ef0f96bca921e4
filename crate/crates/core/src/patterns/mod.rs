//! Avoiding-word families for the two-word strengthenings of `X0` over
//! `{a, b, c}`.
//!
//! Each family pairs a periodic word shape with a condition on `(m, x1, y1)`.
//! Most conditions are congruences modulo the word's period, searched over
//! every parameter tuple whose period is at most `2m`. A few derive their
//! parameters directly from the instance.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::decide::Certificate;
use crate::error::{invalid, Error, Result};
use crate::periodic::PeriodicWord;
use crate::set::WordSet;
use crate::theory::{acb_runs_applicable, acb_runs_avoider, even_gaps_certificate, ConjectureInstance, TopBottomInstance};

mod rows;

pub use rows::{EXPERIMENTAL, QUARANTINED};

/// Raw parameter values; unused slots are zero.
pub type Values = [usize; 4];

/// `(m, x1, y1)` of either set family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Instance {
    pub m: usize,
    pub x1: usize,
    pub y1: usize,
}

impl From<ConjectureInstance> for Instance {
    fn from(i: ConjectureInstance) -> Self {
        Instance { m: i.m, x1: i.x1, y1: i.y1 }
    }
}

impl From<TopBottomInstance> for Instance {
    fn from(i: TopBottomInstance) -> Self {
        Instance { m: i.m, x1: i.x1, y1: i.y1 }
    }
}

/// Which set a family avoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// `T0 ∪ {a⋄^{x1}b⋄^{x2}b, b⋄^{y1}b⋄^{y2}c, a⋄^{m-2}c}`
    Conjecture,
    /// `X0 \ {a⋄a, b⋄c} ∪ {a⋄^{x1}a⋄^{x2}a, b⋄^{y1}c⋄^{y2}c}`
    TopBottom,
}

impl Target {
    pub fn set(self, i: Instance) -> Result<WordSet> {
        match self {
            Target::Conjecture => Ok(ConjectureInstance::new(i.m, i.x1, i.y1)?.set()),
            Target::TopBottom => Ok(TopBottomInstance::new(i.m, i.x1, i.y1)?.set()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strength {
    /// The word avoids the set exactly when the condition holds.
    Iff,
    Sufficient,
}

/// Allowed residues of `x1` and `y1` modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residues {
    pub modulus: usize,
    x1: Vec<bool>,
    y1: Vec<bool>,
}

impl Residues {
    pub fn new(modulus: usize, x1: impl IntoIterator<Item = i64>, y1: impl IntoIterator<Item = i64>) -> Self {
        let mark = |vals: &mut dyn Iterator<Item = i64>| {
            let mut v = alloc::vec![false; modulus];
            for r in vals {
                v[r.rem_euclid(modulus as i64) as usize] = true;
            }
            v
        };
        Residues {
            modulus,
            x1: mark(&mut x1.into_iter()),
            y1: mark(&mut y1.into_iter()),
        }
    }

    #[inline]
    pub fn admits(&self, x1: usize, y1: usize) -> bool {
        self.x1[x1 % self.modulus] && self.y1[y1 % self.modulus]
    }
}

#[derive(Clone, Copy)]
pub(crate) enum Rule {
    /// Parameters enumerated from `m`; `residues` is `None` when the
    /// condition on `m` fails.
    Congruence {
        params: fn(usize) -> Vec<Values>,
        residues: fn(&Values, usize) -> Option<Residues>,
    },
    /// Parameters read off the instance, `None` when the condition fails.
    Direct(fn(Instance) -> Option<Values>),
}

/// A periodic word shape with the condition under which it avoids a set.
#[derive(Clone)]
pub struct PatternFamily {
    pub id: &'static str,
    /// Human-readable base word, e.g. `((ab)^p a (bc)^q)`.
    pub shape: &'static str,
    pub param_names: &'static [&'static str],
    pub target: Target,
    pub strength: Strength,
    /// Excluded from matching: the condition as printed admits instances the
    /// word meets.
    pub quarantined: bool,
    /// Excluded unless asked for: the condition is ambiguous as printed.
    pub experimental: bool,
    pub(crate) rule: Rule,
    pub(crate) word: fn(&Values, Instance) -> String,
}

impl fmt::Debug for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PatternFamily")
            .field("id", &self.id)
            .field("shape", &self.shape)
            .field("target", &self.target)
            .field("strength", &self.strength)
            .field("quarantined", &self.quarantined)
            .field("experimental", &self.experimental)
            .finish()
    }
}

/// A family's parameter assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params {
    names: &'static [&'static str],
    values: Values,
}

impl Params {
    pub fn values(&self) -> &[usize] {
        &self.values[..self.names.len()]
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| *n == name).map(|i| self.values[i])
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, v)) in self.names.iter().zip(self.values).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}={v}")?;
        }
        Ok(())
    }
}

impl PatternFamily {
    fn params(&self, values: Values) -> Params {
        Params {
            names: self.param_names,
            values,
        }
    }

    /// Every parameter tuple the family searches at this `m`, in
    /// lexicographic order. Empty for families with derived parameters.
    pub fn parameter_domain(&self, m: usize) -> Vec<Params> {
        match self.rule {
            Rule::Congruence { params, .. } => params(m).into_iter().map(|v| self.params(v)).collect(),
            Rule::Direct(_) => Vec::new(),
        }
    }

    /// Whether the condition holds at `inst` for `params`.
    pub fn holds(&self, inst: Instance, params: &Params) -> bool {
        match self.rule {
            Rule::Congruence { residues, .. } => {
                residues(&params.values, inst.m).is_some_and(|r| r.admits(inst.x1, inst.y1))
            }
            Rule::Direct(derive) => derive(inst) == Some(params.values),
        }
    }

    /// The family's word for `params`.
    pub fn word(&self, params: &Params, inst: Instance) -> PeriodicWord {
        let s = (self.word)(&params.values, inst);
        let base = s.chars().map(|c| Letter::from_char(c).expect("pattern letters are a..c")).collect();
        PeriodicWord::new(Alphabet::new(3).expect("3 letters"), base).expect("pattern words are non-empty")
    }
}

impl fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}^Z", self.id, self.shape)
    }
}

/// All families, including quarantined and experimental ones.
pub fn registry() -> Vec<PatternFamily> {
    rows::all_families()
}

pub fn family(id: &str) -> Option<PatternFamily> {
    registry().into_iter().find(|f| f.id == id)
}

/// The lexicographically smallest parameters satisfying the family's
/// condition at `inst`.
pub fn eval_condition(family: &PatternFamily, inst: Instance) -> Option<Params> {
    match family.rule {
        Rule::Congruence { params, residues } => params(inst.m)
            .into_iter()
            .find(|v| residues(v, inst.m).is_some_and(|r| r.admits(inst.x1, inst.y1)))
            .map(|v| family.params(v)),
        Rule::Direct(derive) => derive(inst).map(|v| family.params(v)),
    }
}

/// Id of the pseudo-family "avoided with period at most m when x1, y1 are
/// even or y1 = 0".
pub const EVEN_GAPS: &str = "even-gaps";
/// Id of the pseudo-family `(a^p c^q b^p)` with `p + q = m - 1`.
pub const ACB_RUNS: &str = "acb-runs";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    pub family: &'static str,
    /// `None` for pseudo-families.
    pub params: Option<Params>,
    pub word: PeriodicWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub instance: ConjectureInstance,
    pub matches: Vec<Match>,
}

impl MatchReport {
    pub fn uncovered(&self) -> bool {
        self.matches.is_empty()
    }

    pub fn family_ids(&self) -> Vec<&'static str> {
        self.matches.iter().map(|m| m.family).collect()
    }
}

/// Which families take part in matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchOptions {
    pub experimental: bool,
    /// Also try the pseudo-family that needs a period search.
    pub search: bool,
}

impl Default for MatchOptions {
    fn default() -> Self {
        MatchOptions {
            experimental: false,
            search: true,
        }
    }
}

/// Congruence rows prepared for one `m`: every parameter tuple whose
/// condition on `m` holds, with its residues.
#[derive(Debug, Clone)]
pub struct Catalog {
    m: usize,
    families: Vec<PatternFamily>,
    entries: Vec<(usize, Values, Residues)>,
}

impl Catalog {
    pub fn new(m: usize, options: MatchOptions) -> Self {
        let families: Vec<PatternFamily> = registry()
            .into_iter()
            .filter(|f| f.target == Target::Conjecture && !f.quarantined && (options.experimental || !f.experimental))
            .collect();
        let mut entries = Vec::new();
        for (i, f) in families.iter().enumerate() {
            if let Rule::Congruence { params, residues } = f.rule {
                for v in params(m) {
                    if let Some(r) = residues(&v, m) {
                        entries.push((i, v, r));
                    }
                }
            }
        }
        Catalog { m, families, entries }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// First satisfying parameters of each family, registry order.
    pub fn hits(&self, inst: Instance) -> Vec<(&PatternFamily, Params)> {
        let mut out: Vec<(&PatternFamily, Params)> = Vec::new();
        for (i, f) in self.families.iter().enumerate() {
            let v = match f.rule {
                Rule::Congruence { .. } => self
                    .entries
                    .iter()
                    .find(|(j, _, r)| *j == i && r.admits(inst.x1, inst.y1))
                    .map(|(_, v, _)| *v),
                Rule::Direct(derive) => derive(inst),
            };
            if let Some(v) = v {
                out.push((f, f.params(v)));
            }
        }
        out
    }
}

/// Every family whose condition holds at `inst`, each word checked against
/// the set.
pub fn match_families(inst: ConjectureInstance, options: MatchOptions) -> Result<MatchReport> {
    match_with(&Catalog::new(inst.m, options), inst, options)
}

/// [`match_families`] with a prepared catalog for `inst.m`.
pub fn match_with(catalog: &Catalog, inst: ConjectureInstance, options: MatchOptions) -> Result<MatchReport> {
    if catalog.m != inst.m {
        return Err(invalid(alloc::format!("catalog prepared for m={}, instance has m={}", catalog.m, inst.m)));
    }
    let x = inst.set();
    let at = Instance::from(inst);
    let mut matches = Vec::new();
    for (f, params) in catalog.hits(at) {
        let word = f.word(&params, at);
        if !word.avoids_set(&x)? {
            return Err(Error::FamilyContract {
                family: alloc::format!("{} ({params})", f.id),
                instance: alloc::format!("{inst}"),
            });
        }
        matches.push(Match {
            family: f.id,
            params: Some(params),
            word,
        });
    }
    if options.search && crate::theory::even_gaps_applicable(inst) {
        let c: Certificate = even_gaps_certificate(inst).ok_or_else(|| Error::FamilyContract {
            family: EVEN_GAPS.into(),
            instance: alloc::format!("{inst}"),
        })?;
        matches.push(Match {
            family: EVEN_GAPS,
            params: None,
            word: c.word().clone(),
        });
    }
    if acb_runs_applicable(inst) {
        matches.push(Match {
            family: ACB_RUNS,
            params: None,
            word: acb_runs_avoider(inst)?,
        });
    }
    Ok(MatchReport { instance: inst, matches })
}

/// The conditions under which `((ab)^p a (bc)^q)^Z` avoids the conjecture set
/// for `(m, x1, y1)`: `m ≡ 2`, `x1 ≡ 2j - 1` for some `j ∈ [0, q]` and
/// `y1 ≡ 2k - 1` for some `k ∈ [q, p + q + 1]`, all modulo `2(p + q) + 1`.
pub fn ab_alt_bc_condition(m: usize, x1: usize, y1: usize, p: usize, q: usize) -> Result<bool> {
    if q == 0 {
        return Err(invalid("q must be positive"));
    }
    Ok(rows::ab_alt_bc_res(&[p, q, 0, 0], m).is_some_and(|r| r.admits(x1, y1)))
}

/// Instances at which a family's condition holds but its word meets the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub family: &'static str,
    pub instance: Instance,
    pub params: Params,
}

/// Checks `condition ⇒ avoids` for every parameter tuple of `family` over
/// the instances `insts`.
pub fn soundness_violations(family: &PatternFamily, insts: impl IntoIterator<Item = Instance>) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let mut cached: Option<(usize, Vec<(Values, Residues)>)> = None;
    for inst in insts {
        let x = family.target.set(inst)?;
        let candidates: Vec<Values> = match family.rule {
            Rule::Congruence { params, residues } => {
                if cached.as_ref().is_none_or(|(m, _)| *m != inst.m) {
                    let prepared = params(inst.m).into_iter().filter_map(|v| residues(&v, inst.m).map(|r| (v, r))).collect();
                    cached = Some((inst.m, prepared));
                }
                let (_, prepared) = cached.as_ref().expect("just filled");
                prepared.iter().filter(|(_, r)| r.admits(inst.x1, inst.y1)).map(|(v, _)| *v).collect()
            }
            Rule::Direct(derive) => derive(inst).into_iter().collect(),
        };
        for v in candidates {
            let params = family.params(v);
            if !family.word(&params, inst).avoids_set(&x)? {
                out.push(Violation {
                    family: family.id,
                    instance: inst,
                    params,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(m: usize, x1: usize, y1: usize) -> Instance {
        Instance { m, x1, y1 }
    }

    #[test]
    fn registry_shape() {
        let r = registry();
        assert_eq!(r.len(), 26);
        let conj = r.iter().filter(|f| f.target == Target::Conjecture).count();
        assert_eq!(conj, 22);
        let mut ids: Vec<_> = r.iter().map(|f| f.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 26);
        assert_eq!(r.iter().filter(|f| f.experimental).count(), 2);
        let f = family("blocks-ab").unwrap();
        let p = eval_condition(&f, inst(4, 1, 0)).unwrap();
        assert_eq!(p.to_string(), "p=1");
        assert_eq!(f.word(&p, inst(4, 1, 0)).to_string(), "ab");
    }

    #[test]
    fn ab_alt_bc_examples() {
        let f = family("ab-alt-bc").unwrap();
        assert_eq!(f.strength, Strength::Iff);
        let p = eval_condition(&f, inst(12, 6, 3)).unwrap();
        // (0, 2) precedes (1, 1); both have modulus 5.
        assert_eq!(p.to_string(), "p=0, q=2");
        assert_eq!(f.word(&p, inst(12, 6, 3)).to_string(), "abcbc");
        let one = f.parameter_domain(12).into_iter().find(|p| p.values() == [1, 1]).unwrap();
        assert!(f.holds(inst(12, 6, 3), &one));
        assert_eq!(f.word(&one, inst(12, 6, 3)).to_string(), "ababc");
        assert!(ab_alt_bc_condition(12, 6, 3, 1, 1).unwrap());
        assert!(!ab_alt_bc_condition(13, 6, 3, 1, 1).unwrap());
        assert!(!ab_alt_bc_condition(12, 5, 3, 1, 1).unwrap());
        assert!(ab_alt_bc_condition(12, 6, 3, 1, 0).is_err());
    }

    #[test]
    fn blocks_ab_absent_for_even_x1() {
        assert_eq!(eval_condition(&family("blocks-ab").unwrap(), inst(12, 6, 3)), None);
    }

    #[test]
    fn mod2_ab_params() {
        let f = family("mod2-ab").unwrap();
        assert!(eval_condition(&f, inst(10, 5, 2)).unwrap().values().is_empty());
        assert!(eval_condition(&f, inst(10, 4, 2)).is_none());
    }

    #[test]
    fn matching() {
        let r = match_families(ConjectureInstance::new(12, 6, 3).unwrap(), MatchOptions::default()).unwrap();
        assert!(r.family_ids().contains(&"ab-alt-bc"));
        assert!(!r.uncovered());
        let r = match_families(ConjectureInstance::new(9, 4, 2).unwrap(), MatchOptions::default()).unwrap();
        assert!(r.family_ids().contains(&EVEN_GAPS));
        let w = &r.matches.iter().find(|m| m.family == EVEN_GAPS).unwrap().word;
        assert!(w.period() <= 9);
    }

    #[test]
    fn catalog_rejects_other_m() {
        let c = Catalog::new(10, MatchOptions::default());
        assert!(match_with(&c, ConjectureInstance::new(12, 6, 3).unwrap(), MatchOptions::default()).is_err());
    }
}
