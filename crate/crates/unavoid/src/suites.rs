//! Property suites comparing closed-form predicates, constructions and
//! reductions against the exact decider.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unavoid_core::decide::{decide_exact, Verdict, WindowGraphConfig};
use unavoid_core::patterns::{ab_alt_bc_condition, registry, soundness_violations, Instance, Target};
use unavoid_core::reductions::{self, expand, factoring, hole_truncation, prefix_suffix, Operation, WitnessRule};
use unavoid_core::theory::{
    acb_runs_applicable, acb_runs_avoider, binary_two_fill_set, binary_two_fill_unavoidable, conjecture_region,
    endpoint_fill_unavoidable, equal_tail_claim, even_gaps_applicable, even_gaps_certificate, gap_swap_partner,
    gap_swap_set, max_fill, max_fill_search, min_holes, same_fills_avoidable, same_fills_set, Claim,
    ConjectureInstance, EndpointFill, TopBottomInstance,
};
use unavoid_core::{Alphabet, Letter, PartialWord, PeriodicWord, Symbol, WordSet};

/// Id, description and default `m_max` of every suite.
pub const SUITES: &[(&str, &str, usize)] = &[
    ("same-fills", "both same-endpoint words filled with their own letter: 2-adic predicate vs exact decider", 12),
    ("endpoint-fill", "one distinct-endpoint word filled with an endpoint letter, all four cases, vs exact decider", 12),
    ("binary-two-fill", "two-letter set with three interior letters in a⋄b: predicate vs exact decider", 15),
    ("equal-tail", "top-bottom sets with y1 = y2: unavoidability claim and reduced set vs exact decider", 9),
    ("ab-alt-bc", "((ab)^p a (bc)^q) conditions vs direct avoidance, p + q <= 5", 60),
    ("catalog-soundness", "every active pattern family: condition implies its word avoids", 60),
    ("even-gaps", "even-gap instances have an avoider of period at most m", 60),
    ("gap-swap", "partner instance has the same exact verdict", 10),
    ("acb-runs", "(a^p c^q b^p) applicability vs brute force over p + q = m - 1", 30),
    ("reductions", "four set operations preserve exact verdicts on random sets (m-max = max word length)", 6),
    ("max-fill-small-m", "exhaustive strengthening search reproduces the maximum fill count", 6),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: String,
    pub checked: usize,
    pub failures: usize,
    /// The first few failing cases.
    pub examples: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: &str) -> Self {
        SuiteOutcome {
            suite: suite.to_string(),
            checked: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 10 {
                self.examples.push(what());
            }
        }
    }
}

impl std::fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(f, "{status} {}: {} checked, {} failed", self.suite, self.checked, self.failures)?;
        for e in &self.examples {
            writeln!(f, "  counterexample: {e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Core(#[from] unavoid_core::Error),
}

type Result<T> = std::result::Result<T, SuiteError>;

pub fn default_m_max(id: &str) -> Option<usize> {
    SUITES.iter().find(|s| s.0 == id).map(|s| s.2)
}

pub fn run_suite(id: &str, m_max: usize) -> Result<SuiteOutcome> {
    match id {
        "same-fills" => same_fills(m_max),
        "endpoint-fill" => endpoint_fill(m_max),
        "binary-two-fill" => binary_two_fill(m_max),
        "equal-tail" => equal_tail(m_max),
        "ab-alt-bc" => ab_alt_bc(m_max),
        "catalog-soundness" => catalog_soundness(m_max),
        "even-gaps" => even_gaps(m_max),
        "gap-swap" => gap_swap(m_max),
        "acb-runs" => acb_runs(m_max),
        "reductions" => reductions_suite(m_max, 500, 0x5eed),
        "max-fill-small-m" => max_fill_small_m(m_max),
        _ => Err(SuiteError::Unknown(id.to_string())),
    }
}

/// Windows up to 2^20 nodes cover every `k = 3`, `m <= 12` set.
fn oracle() -> WindowGraphConfig {
    WindowGraphConfig::new(1 << 20)
}

fn exact(x: &WordSet) -> Result<Verdict> {
    Ok(decide_exact(x, &oracle())?)
}

fn same_fills(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("same-fills");
    for m in 3..=m_max {
        for x1 in 0..=m - 3 {
            for y1 in 0..=m - 3 {
                let claim = same_fills_avoidable(m, x1, y1)?;
                let truth = exact(&same_fills_set(m, x1, y1)?)?.is_avoidable();
                out.check(claim == truth, || format!("(m={m}, x1={x1}, y1={y1}): predicate {claim}, decider {truth}"));
            }
        }
    }
    Ok(out)
}

fn endpoint_fill(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("endpoint-fill");
    for case in EndpointFill::ALL {
        for m in 3..=m_max {
            for x1 in 0..=m - 3 {
                let x = case.relevant_split(x1, m - 3 - x1);
                let claim = endpoint_fill_unavoidable(case.id(), m, x)?;
                let truth = exact(&case.set(m, x1)?)?.is_unavoidable();
                out.check(claim == truth, || format!("{case}, m={m}, x1={x1}: predicate {claim}, decider {truth}"));
            }
        }
    }
    Ok(out)
}

fn binary_two_fill(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("binary-two-fill");
    for m in 4..=m_max {
        for x1 in 0..=m - 4 {
            for x2 in 0..=m - 4 - x1 {
                let x3 = m - 4 - x1 - x2;
                let claim = binary_two_fill_unavoidable(m, x1, x2, x3)?;
                let truth = exact(&binary_two_fill_set(m, x1, x2, x3)?)?.is_unavoidable();
                out.check(claim == truth, || format!("(m={m}, {x1}, {x2}, {x3}): predicate {claim}, decider {truth}"));
            }
        }
    }
    Ok(out)
}

fn equal_tail(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("equal-tail");
    for y in 0.. {
        let m = 2 * y + 3;
        if m > m_max {
            break;
        }
        for x1 in 0..=m - 3 {
            let full = exact(&TopBottomInstance::new(m, x1, y)?.set())?;
            if equal_tail_claim(m, x1, y)? == Claim::Unavoidable {
                out.check(full.is_unavoidable(), || format!("(m={m}, x1={x1}, y={y}): claimed unavoidable, decider {}", full.label()));
            }
            let reduced = exact(&reductions::equal_tail_reduced_set(m, x1, y)?)?;
            out.check(reduced.label() == full.label(), || {
                format!("(m={m}, x1={x1}, y={y}): reduced set {}, full set {}", reduced.label(), full.label())
            });
        }
    }
    Ok(out)
}

fn ab_alt_bc(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("ab-alt-bc");
    let k3 = Alphabet::new(3)?;
    for p in 0..5 {
        for q in 1..=5 - p {
            let s = "ab".repeat(p) + "a" + &"bc".repeat(q);
            let w = PeriodicWord::parse(k3, &s)?;
            for m in 3..=m_max {
                for x1 in 0..=m - 3 {
                    for y1 in 0..=m - 3 {
                        let claim = ab_alt_bc_condition(m, x1, y1, p, q)?;
                        let truth = w.avoids_set(&ConjectureInstance::new(m, x1, y1)?.set())?;
                        out.check(claim == truth, || format!("(m={m}, x1={x1}, y1={y1}, p={p}, q={q}): condition {claim}, avoids {truth}"));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Top-bottom rows are checked over every split up to `m = min(m_max, 40)`.
fn catalog_soundness(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("catalog-soundness");
    let region: Vec<Instance> = conjecture_region(3, m_max.max(3))?.into_iter().map(Instance::from).collect();
    let mut all_splits = Vec::new();
    for m in 3..=m_max.min(40) {
        for x1 in 0..=m - 3 {
            for y1 in 0..=m - 3 {
                all_splits.push(Instance { m, x1, y1 });
            }
        }
    }
    for f in registry().into_iter().filter(|f| !f.quarantined && !f.experimental) {
        let insts = match f.target {
            Target::Conjecture => region.clone(),
            Target::TopBottom => all_splits.clone(),
        };
        let n = insts.len();
        let v = soundness_violations(&f, insts)?;
        out.checked += n;
        out.failures += v.len();
        for x in v.iter().take(10usize.saturating_sub(out.examples.len())) {
            out.examples.push(format!("{} at {:?} with {}", x.family, x.instance, x.params));
        }
    }
    Ok(out)
}

fn even_gaps(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("even-gaps");
    for inst in conjecture_region(3, m_max.max(3))?.into_iter().filter(|&i| even_gaps_applicable(i)) {
        let c = even_gaps_certificate(inst);
        out.check(c.as_ref().is_some_and(|c| c.period() <= inst.m), || format!("{inst}: no avoider of period <= m"));
    }
    Ok(out)
}

fn gap_swap(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("gap-swap");
    for m in 3..=m_max {
        for x1 in 0..=m - 3 {
            for y1 in 0..=m - 3 {
                let inst = ConjectureInstance::new(m, x1, y1)?;
                let partner = gap_swap_partner(inst);
                out.check(partner.set() == gap_swap_set(inst), || format!("{inst}: partner set mismatch"));
                let (a, b) = (exact(&inst.set())?, exact(&partner.set())?);
                out.check(a.label() == b.label(), || format!("{inst}: {} vs partner {}", a.label(), b.label()));
            }
        }
    }
    Ok(out)
}

fn acb_runs(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("acb-runs");
    let k3 = Alphabet::new(3)?;
    for m in 3..=m_max {
        for x1 in 0..=m - 3 {
            for y1 in 0..=m - 3 {
                let inst = ConjectureInstance::new(m, x1, y1)?;
                if x1 > inst.x2() {
                    continue;
                }
                let x = inst.set();
                let mut any = false;
                for p in 1..m - 1 {
                    let w = PeriodicWord::from_runs(k3, &[(Letter::A, p), (Letter::C, m - 1 - p), (Letter::B, p)])?;
                    any |= w.avoids_set(&x)?;
                }
                let claim = acb_runs_applicable(inst);
                out.check(claim == any, || format!("{inst}: applicable {claim}, some (p, q) avoids {any}"));
                if claim {
                    out.check(acb_runs_avoider(inst).is_ok(), || format!("{inst}: construction failed"));
                }
            }
        }
    }
    Ok(out)
}

fn random_word(rng: &mut ChaCha8Rng, k: usize, max_len: usize) -> PartialWord {
    let len = rng.random_range(1..=max_len);
    let mut syms: Vec<Symbol> = (0..len)
        .map(|_| {
            if rng.random_bool(0.35) {
                Symbol::Hole
            } else {
                Symbol::Letter(Letter(rng.random_range(0..k) as u8))
            }
        })
        .collect();
    // Keep at least one defined letter so the word is not trivially met.
    if syms.iter().all(|s| s.is_hole()) {
        let i = rng.random_range(0..len);
        syms[i] = Symbol::Letter(Letter(rng.random_range(0..k) as u8));
    }
    PartialWord::new(syms)
}

fn random_set(rng: &mut ChaCha8Rng, max_len: usize) -> Option<WordSet> {
    let k = rng.random_range(1..=3);
    let n = rng.random_range(1..=5);
    let words: Vec<PartialWord> = (0..n).map(|_| random_word(rng, k, max_len)).collect();
    WordSet::new(Alphabet::new(k).ok()?, words).ok()
}

/// Applies `op` somewhere in `x`, or `None` when it does not apply.
pub fn apply_random(op: Operation, x: &WordSet, rng: &mut ChaCha8Rng, rule: WitnessRule) -> Option<WordSet> {
    match op {
        Operation::Factoring => {
            let (y, t) = factoring(x);
            (!t.is_empty()).then_some(y)
        }
        Operation::HoleTruncation => {
            let (y, t) = hole_truncation(x);
            (!t.is_empty()).then_some(y)
        }
        Operation::PrefixSuffix => {
            let mut order: Vec<&PartialWord> = x.iter().collect();
            for i in (1..order.len()).rev() {
                order.swap(i, rng.random_range(0..=i));
            }
            order.into_iter().find_map(|w| prefix_suffix(x, w, rule).ok().map(|(y, _)| y))
        }
        Operation::Expansion => {
            let with_holes: Vec<&PartialWord> = x.iter().filter(|w| w.hole_count() > 0).collect();
            let w = *with_holes.choose(rng)?;
            let holes: Vec<usize> = w.hole_positions().collect();
            let n = rng.random_range(1..=holes.len().min(2));
            let picks: Vec<usize> = holes.choose_multiple(rng, n).copied().collect();
            expand(x, w, &picks).ok().map(|(y, _)| y)
        }
    }
}

/// `per_op` random applicable sets per operation, verdicts compared before
/// and after. Prefix-suffix is checked under both witness rules.
pub fn reductions_suite(max_len: usize, per_op: usize, seed: u64) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("reductions");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = oracle();
    let cases = [
        (Operation::Factoring, WitnessRule::Literal),
        (Operation::PrefixSuffix, WitnessRule::Literal),
        (Operation::PrefixSuffix, WitnessRule::Strict),
        (Operation::HoleTruncation, WitnessRule::Literal),
        (Operation::Expansion, WitnessRule::Literal),
    ];
    for (op, rule) in cases {
        let mut done = 0;
        let mut attempts = 0;
        while done < per_op && attempts < per_op * 1000 {
            attempts += 1;
            let Some(x) = random_set(&mut rng, max_len) else { continue };
            let Some(y) = apply_random(op, &x, &mut rng, rule) else { continue };
            let before = decide_exact(&x, &cfg)?;
            let after = decide_exact(&y, &cfg)?;
            done += 1;
            out.check(before.label() == after.label(), || {
                format!("{op} ({rule:?}): {x} is {} but {y} is {}", before.label(), after.label())
            });
        }
        out.check(done == per_op, || format!("{op} ({rule:?}): only {done} applicable sets found"));
    }
    Ok(out)
}

/// `k = 2` for `4 <= m <= m_max`, and `k = 3` for `m = 4`.
fn max_fill_small_m(m_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("max-fill-small-m");
    let cfg = oracle();
    let mut cases: Vec<(usize, usize)> = (4..=m_max).map(|m| (2, m)).collect();
    if m_max >= 4 {
        cases.push((3, 4));
    }
    for (k, m) in cases {
        let found = max_fill_search(k, m, &cfg)?.max_fill;
        let expected = max_fill(m)?;
        out.check(found == expected, || format!("k={k}, m={m}: search {found}, formula {expected}"));
        let h = min_holes(k, m)?;
        let total = unavoid_core::theory::min_size_bound(k) * (m - 2);
        out.check(h.value == total - found, || format!("k={k}, m={m}: H={} but search gives {}", h.value, total - found));
    }
    Ok(out)
}
