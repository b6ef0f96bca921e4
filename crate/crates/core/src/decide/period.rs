use alloc::vec::Vec;

use super::{AvoidMethod, Certificate, Verdict};
use crate::alphabet::Letter;
use crate::periodic::PeriodicWord;
use crate::set::WordSet;

/// Tries every period `1..=max_period` in order and returns the first avoider found.
///
/// Never returns `Unavoidable`.
pub fn decide_bounded_period(x: &WordSet, max_period: usize) -> Verdict {
    for p in 1..=max_period {
        if let Some(w) = find_avoider_with_period(x, p) {
            let cert = Certificate::verify(x, w, AvoidMethod::PeriodSearch)
                .expect("period search produced a word that meets the set");
            return Verdict::Avoidable(cert);
        }
    }
    Verdict::Unknown {
        period_bound: max_period,
    }
}

/// A base word `v` with `|v| = p` such that `v^Z` avoids `x`, if one exists.
///
/// Variables are the letters `w(0..p)`. Each member `u` at each offset `i`
/// forbids the joint assignment `w((i + j) mod p) = u(j)` over `j ∈ D(u)`;
/// offsets where two defined positions fold onto one variable with different
/// letters forbid nothing. Backtracking assigns variables in index order and
/// letters in alphabet order. Propagation: once all but one literal of a
/// forbidden tuple hold, the last letter is removed from its variable.
pub fn find_avoider_with_period(x: &WordSet, p: usize) -> Option<PeriodicWord> {
    let k = x.alphabet().size();
    let mut csp = Csp::new(x, p)?;
    let full: u32 = (1u32 << k) - 1;
    csp.domains = alloc::vec![full; p];
    if !csp.propagate_all() {
        return None;
    }
    if !csp.search(0) {
        return None;
    }
    let base = csp
        .domains
        .iter()
        .map(|d| Letter(d.trailing_zeros() as u8))
        .collect();
    PeriodicWord::new(x.alphabet(), base).ok()
}

struct Csp {
    /// Flattened forbidden tuples of (variable, letter) literals.
    lits: Vec<(u32, u8)>,
    starts: Vec<u32>,
    /// Tuples mentioning each variable.
    occurs: Vec<Vec<u32>>,
    domains: Vec<u32>,
    trail: Vec<(u32, u32)>,
    queue: Vec<u32>,
}

impl Csp {
    /// `None` when some tuple is empty, i.e. nothing of period `p` can avoid `x`.
    fn new(x: &WordSet, p: usize) -> Option<Csp> {
        let mut tuples: Vec<Vec<(u32, u8)>> = Vec::new();
        for u in x {
            let defined: Vec<(usize, Letter)> = u.defined().collect();
            'offset: for i in 0..p {
                let mut t: Vec<(u32, u8)> = Vec::with_capacity(defined.len());
                for &(j, l) in &defined {
                    let v = ((i + j) % p) as u32;
                    match t.iter().find(|&&(w, _)| w == v) {
                        Some(&(_, l2)) if l2 != l.0 => continue 'offset,
                        Some(_) => {}
                        None => t.push((v, l.0)),
                    }
                }
                if t.is_empty() {
                    return None;
                }
                t.sort_unstable();
                tuples.push(t);
            }
        }
        tuples.sort_unstable();
        tuples.dedup();

        let mut lits = Vec::new();
        let mut starts = Vec::with_capacity(tuples.len() + 1);
        let mut occurs = alloc::vec![Vec::new(); p];
        for (id, t) in tuples.iter().enumerate() {
            starts.push(lits.len() as u32);
            for &(v, l) in t {
                occurs[v as usize].push(id as u32);
                lits.push((v, l));
            }
        }
        starts.push(lits.len() as u32);
        Some(Csp {
            lits,
            starts,
            occurs,
            domains: Vec::new(),
            trail: Vec::new(),
            queue: Vec::new(),
        })
    }

    fn set_domain(&mut self, v: u32, d: u32) {
        self.trail.push((v, self.domains[v as usize]));
        self.domains[v as usize] = d;
        self.queue.push(v);
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, d) = self.trail.pop().expect("trail above mark");
            self.domains[v as usize] = d;
        }
    }

    /// Returns false on conflict.
    fn check_tuple(&mut self, t: u32) -> bool {
        let (s, e) = (self.starts[t as usize], self.starts[t as usize + 1]);
        let mut open: Option<(u32, u8)> = None;
        for idx in s..e {
            let (v, l) = self.lits[idx as usize];
            let d = self.domains[v as usize];
            let bit = 1u32 << l;
            if d & bit == 0 {
                return true;
            }
            if d != bit {
                if open.is_some() {
                    return true;
                }
                open = Some((v, l));
            }
        }
        match open {
            None => false,
            Some((v, l)) => {
                let d = self.domains[v as usize] & !(1u32 << l);
                if d == 0 {
                    return false;
                }
                self.set_domain(v, d);
                true
            }
        }
    }

    fn propagate(&mut self) -> bool {
        while let Some(v) = self.queue.pop() {
            for i in 0..self.occurs[v as usize].len() {
                let t = self.occurs[v as usize][i];
                if !self.check_tuple(t) {
                    self.queue.clear();
                    return false;
                }
            }
        }
        true
    }

    fn propagate_all(&mut self) -> bool {
        for t in 0..self.starts.len() as u32 - 1 {
            if !self.check_tuple(t) {
                self.queue.clear();
                return false;
            }
        }
        self.propagate()
    }

    fn search(&mut self, from: usize) -> bool {
        let Some(v) = (from..self.domains.len()).find(|&v| self.domains[v].count_ones() > 1) else {
            return true;
        };
        let mut d = self.domains[v];
        while d != 0 {
            let l = d.trailing_zeros();
            d &= d - 1;
            let mark = self.trail.len();
            self.set_domain(v as u32, 1 << l);
            if self.propagate() && self.search(v + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_x0, Alphabet};

    fn k(n: usize) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    #[test]
    fn x0_has_no_periodic_avoider() {
        let x = build_x0(3, 5).unwrap();
        assert_eq!(
            decide_bounded_period(&x, 9),
            Verdict::Unknown { period_bound: 9 }
        );
    }

    #[test]
    fn two_same_endpoint_words() {
        let x = WordSet::parse(k(2), "a--a b--b").unwrap();
        let v = decide_bounded_period(&x, 7);
        let c = v.certificate().unwrap();
        // Unary words meet one of the two; (ab)^Z avoids both.
        assert_eq!(c.period(), 2);
        assert_eq!(c.word().to_string(), "ab");
    }

    #[test]
    fn single_word() {
        let x = WordSet::parse(k(2), "a--a").unwrap();
        let v = decide_bounded_period(&x, 7);
        assert_eq!(v.certificate().unwrap().word().to_string(), "b");
        let x = WordSet::parse(k(2), "a--a bb").unwrap();
        let v = decide_bounded_period(&x, 7);
        assert_eq!(v.certificate().unwrap().word().to_string(), "ab");
    }

    #[test]
    fn folding_conflicts_impose_nothing() {
        // With p = 1 both letters of "ab" land on w(0) and conflict.
        let x = WordSet::parse(k(2), "ab").unwrap();
        assert_eq!(find_avoider_with_period(&x, 1).unwrap().to_string(), "a");
    }

    #[test]
    fn trivial_sets_never_get_a_certificate() {
        let x = WordSet::parse(k(2), "--").unwrap();
        assert_eq!(
            decide_bounded_period(&x, 5),
            Verdict::Unknown { period_bound: 5 }
        );
    }
}
