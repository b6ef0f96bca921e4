mod common;

use common::{avoidable, avoider_of_period, min_period, periodic_avoids, set_strategy};
use proptest::prelude::*;
use unavoid_core::decide::{decide, decide_bounded_period, decide_exact, find_avoider_with_period, Verdict, WindowGraphConfig};
use unavoid_core::{build_x0, Alphabet, WordSet};

fn base(v: &Verdict) -> Vec<u8> {
    v.certificate().unwrap().word().base().iter().map(|l| l.0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn exact_matches_brute_force(x in set_strategy(5, 4)) {
        let v = decide_exact(&x, &WindowGraphConfig::default()).unwrap();
        prop_assert_eq!(v.is_avoidable(), avoidable(&x), "{} gave {}", x, v);
        if v.is_avoidable() {
            prop_assert!(periodic_avoids(&base(&v), &x));
        }
    }

    #[test]
    fn period_search_finds_the_least_period(x in set_strategy(4, 3)) {
        let bound = 2 * x.max_len() + 1;
        let v = decide_bounded_period(&x, bound);
        match min_period(&x, bound) {
            Some(p) => {
                prop_assert_eq!(v.certificate().map(|c| c.period()), Some(p));
                prop_assert!(periodic_avoids(&base(&v), &x));
            }
            None => prop_assert_eq!(v, Verdict::Unknown { period_bound: bound }),
        }
    }

    #[test]
    fn fixed_period_search_is_complete(x in set_strategy(4, 3), p in 1usize..=6) {
        let found = find_avoider_with_period(&x, p);
        prop_assert_eq!(found.is_some(), avoider_of_period(&x, p).is_some());
        if let Some(w) = found {
            prop_assert_eq!(w.period(), p);
            prop_assert!(w.avoids_set(&x).unwrap());
        }
    }

    #[test]
    fn combined_decider_agrees_with_exact(x in set_strategy(5, 4)) {
        let cfg = WindowGraphConfig::default();
        let v = decide(&x, 2 * x.max_len(), &cfg);
        prop_assert_eq!(v.label(), decide_exact(&x, &cfg).unwrap().label());
        if let Some(c) = v.certificate() {
            prop_assert!(c.word().avoids_set(&x).unwrap());
        }
    }

    #[test]
    fn verdict_is_invariant_under_reversal(x in set_strategy(5, 4)) {
        let cfg = WindowGraphConfig::default();
        prop_assert_eq!(
            decide_exact(&x, &cfg).unwrap().label(),
            decide_exact(&x.reversed(), &cfg).unwrap().label()
        );
    }
}

#[test]
fn minimal_sets_are_unavoidable() {
    let cfg = WindowGraphConfig::default();
    for k in 2..=3 {
        for m in 2..=6 {
            let x = build_x0(k, m).unwrap();
            assert!(decide_exact(&x, &cfg).unwrap().is_unavoidable(), "k={k} m={m}");
            assert!(!avoidable(&x));
        }
    }
}

#[test]
fn spaced_word_is_avoided_by_the_other_letter() {
    let x = WordSet::parse(Alphabet::new(2).unwrap(), "a--a").unwrap();
    let v = decide(&x, 7, &WindowGraphConfig::default());
    assert_eq!(v.certificate().unwrap().period(), 1);
    assert_eq!(min_period(&x, 7), Some(1));
}
