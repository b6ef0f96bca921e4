#![allow(clippy::manual_is_multiple_of)]

mod common;

use std::collections::HashSet;

use common::avoidable;
use proptest::prelude::*;
use unavoid_core::decide::{decide_exact, WindowGraphConfig};
use unavoid_core::theory::{
    binary_fill_set, conjecture_region, conjecture_region_count, cyclic_orientation_sets, equal_tail_unavoidable,
    far_endpoints_check, gap_swap_partner, gap_swap_set, max_fill, min_holes, min_size_bound, nu, nu2, switch_sets,
    ConjectureInstance,
};
use unavoid_core::{Letter, WordSet};

fn exact(x: &WordSet) -> bool {
    decide_exact(x, &WindowGraphConfig::default()).unwrap().is_avoidable()
}

fn naive_nu(p: u64, mut n: u64) -> u32 {
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

proptest! {
    #[test]
    fn valuation_matches_repeated_division(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), n in 1u64..1_000_000) {
        prop_assert_eq!(nu(p, n).unwrap(), naive_nu(p, n));
        prop_assert_eq!(nu2(n as usize), naive_nu(2, n));
    }
}

#[test]
fn hole_bound_identity() {
    for m in 4..=100 {
        assert_eq!(max_fill(m).unwrap(), if m % 2 == 0 { m - 1 } else { m });
        for k in 2..=5 {
            let h = min_holes(k, m).unwrap();
            assert_eq!(h.value, (k + k * (k - 1) / 2) * (m - 2) - h.max_fill);
            assert_eq!(min_size_bound(k), k + k * (k - 1) / 2);
            assert_eq!(h.conditional, k >= 3);
        }
    }
    assert_eq!(min_holes(3, 7).unwrap().to_string(), "H = 23 (conditional on the conjecture-region conjecture), max_fill = 7");
    assert_eq!(min_holes(2, 6).unwrap().value, 7);
    assert_eq!(min_holes(2, 7).unwrap().value, 8);
}

#[test]
fn region_count_by_direct_enumeration() {
    let mut n = 0u64;
    for m in 3..=100usize {
        for x1 in 0..=m - 3 {
            for y1 in 0..=m - 3 {
                let (x2, y2) = (m - 3 - x1, m - 3 - y1);
                if y1 <= x2 && x2 <= x1 && x1 <= y2 {
                    n += 1;
                }
            }
        }
    }
    assert_eq!(n, 41_650);
    assert_eq!(conjecture_region_count(3, 100), n);
    assert_eq!(conjecture_region(3, 100).unwrap().len() as u64, n);
}

#[test]
fn gap_swap_is_an_involution_preserving_verdicts() {
    for m in 3..=7 {
        for x1 in 0..=m - 3 {
            for y1 in 0..=m - 3 {
                let inst = ConjectureInstance::new(m, x1, y1).unwrap();
                let partner = gap_swap_partner(inst);
                assert_eq!(gap_swap_partner(partner), inst);
                assert!(gap_swap_set(inst).same_words(&partner.set()));
                assert_eq!(exact(&inst.set()), exact(&partner.set()), "{inst:?}");
            }
        }
    }
}

#[test]
fn switch_implications_hold() {
    for m in 3..=7 {
        for x1 in 0..=m - 3 {
            for y1 in 0..=m - 3 {
                let s = switch_sets(m, x1, y1).unwrap();
                let (a, b, c, d) = (exact(&s.x2), exact(&s.x2_prime), exact(&s.y2_prime), exact(&s.y2));
                assert!(!a || b, "m={m} x1={x1} y1={y1}");
                assert_eq!(b, c, "m={m} x1={x1} y1={y1}");
                assert!(!c || d, "m={m} x1={x1} y1={y1}");
            }
        }
    }
}

#[test]
fn cyclic_orientations_have_the_stated_avoiders() {
    for m in 2..=10 {
        for (x, w) in cyclic_orientation_sets(m).unwrap() {
            assert_eq!(w.period(), 3 * (m - 1));
            assert!(w.avoids_set(&x).unwrap(), "m={m}");
        }
    }
}

#[test]
fn equal_tail_claim_is_sound() {
    for y in 0..=4 {
        let m = 2 * y + 3;
        for x1 in 0..=m - 3 {
            if equal_tail_unavoidable(m, x1, y).unwrap() {
                let x = unavoid_core::theory::TopBottomInstance::new(m, x1, y).unwrap().set();
                assert!(!exact(&x), "m={m} x1={x1}");
            }
        }
    }
}

fn subsets(n: usize, max: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize <= max).map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect()).collect()
}

#[test]
fn mixed_fills_match_some_b_only_fill() {
    let (a, b) = (Letter::A, Letter::B);
    for m in 4..=10 {
        let interior: Vec<usize> = (1..m - 1).collect();
        let mut b_only = HashSet::new();
        for s in subsets(interior.len(), interior.len()) {
            let fills: Vec<_> = s.iter().map(|&i| (interior[i], b)).collect();
            b_only.insert(avoidable(&binary_fill_set(m, &fills).unwrap()));
        }
        for s in subsets(interior.len(), 3) {
            for mask in 0u32..1 << s.len() {
                let fills: Vec<_> = s.iter().enumerate().map(|(j, &i)| (interior[i], if mask >> j & 1 == 1 { a } else { b })).collect();
                if !fills.iter().any(|f| f.1 == a) || !fills.iter().any(|f| f.1 == b) {
                    continue;
                }
                let v = exact(&binary_fill_set(m, &fills).unwrap());
                assert!(b_only.contains(&v), "m={m} fills={fills:?}");
            }
        }
    }
}

#[test]
fn far_endpoint_fills_are_avoidable() {
    let cfg = WindowGraphConfig::default();
    assert!(far_endpoints_check(3, 6, 1, 2, 1, Letter::A, 11, &cfg).unwrap().is_avoidable());
    assert!(far_endpoints_check(4, 6, 1, 3, 1, Letter::A, 11, &cfg).unwrap().is_avoidable());
    assert!(far_endpoints_check(3, 6, 1, 1, 1, Letter::A, 11, &cfg).is_err());
    for m in 3..=6 {
        for x1 in 0..=m - 3 {
            for l in [Letter::A, Letter::B, Letter::C] {
                let v = far_endpoints_check(3, m, 1, 2, x1, l, 2 * m, &cfg).unwrap();
                assert!(v.is_avoidable(), "m={m} x1={x1} {l:?}");
            }
        }
    }
}
