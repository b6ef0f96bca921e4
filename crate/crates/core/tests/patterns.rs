mod common;

use common::periodic_avoids;
use proptest::prelude::*;
use unavoid_core::patterns::{
    eval_condition, family, match_families, registry, soundness_violations, Catalog, Instance, MatchOptions, Strength,
    Target,
};
use unavoid_core::theory::{conjecture_region, ConjectureInstance};

fn region_instance() -> impl Strategy<Value = ConjectureInstance> {
    (3usize..=60).prop_flat_map(|m| {
        let insts = conjecture_region(m, m).unwrap();
        prop::sample::select(insts)
    })
}

fn bytes(w: &unavoid_core::PeriodicWord) -> Vec<u8> {
    w.base().iter().map(|l| l.0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_match_avoids(inst in region_instance()) {
        let report = match_families(inst, MatchOptions::default()).unwrap();
        let x = inst.set();
        for hit in &report.matches {
            prop_assert!(periodic_avoids(&bytes(&hit.word), &x), "{} at {:?}", hit.family, inst);
        }
    }

    #[test]
    fn matching_is_deterministic(inst in region_instance()) {
        let a = match_families(inst, MatchOptions::default()).unwrap();
        let catalog = Catalog::new(inst.m, MatchOptions::default());
        let b = unavoid_core::patterns::match_with(&catalog, inst, MatchOptions::default()).unwrap();
        prop_assert_eq!(a.family_ids(), b.family_ids());
        let words = |r: &unavoid_core::patterns::MatchReport| r.matches.iter().map(|h| h.word.to_string()).collect::<Vec<_>>();
        prop_assert_eq!(words(&a), words(&b));
    }

    #[test]
    fn reported_params_are_the_least_that_hold(inst in region_instance()) {
        for f in registry().iter().filter(|f| f.target == Target::Conjecture) {
            let domain = f.parameter_domain(inst.m);
            if domain.is_empty() {
                continue;
            }
            let first = domain.iter().find(|p| f.holds(inst.into(), p)).cloned();
            prop_assert_eq!(eval_condition(f, inst.into()), first, "{}", f.id);
        }
    }
}

#[test]
fn iff_rows_hold_in_both_directions() {
    for m in 3..=16 {
        for inst in conjecture_region(m, m).unwrap() {
            let x = inst.set();
            for f in registry().iter().filter(|f| f.strength == Strength::Iff && !f.quarantined && f.target == Target::Conjecture) {
                for p in f.parameter_domain(m) {
                    let avoids = periodic_avoids(&bytes(&f.word(&p, inst.into())), &x);
                    assert_eq!(f.holds(inst.into(), &p), avoids, "{} ({p}) at {inst:?}", f.id);
                }
            }
        }
    }
}

#[test]
fn quarantined_rows_have_counterexamples() {
    let insts: Vec<Instance> = conjecture_region(3, 30).unwrap().into_iter().map(Instance::from).collect();
    for f in registry().iter().filter(|f| f.quarantined) {
        let v = soundness_violations(f, insts.iter().copied()).unwrap();
        assert!(!v.is_empty(), "{}", f.id);
        let w = f.word(&v[0].params, v[0].instance);
        assert!(!periodic_avoids(&bytes(&w), &f.target.set(v[0].instance).unwrap()));
    }
}

#[test]
fn active_rows_are_sound_on_small_instances() {
    let insts: Vec<Instance> = conjecture_region(3, 30).unwrap().into_iter().map(Instance::from).collect();
    for f in registry().iter().filter(|f| !f.quarantined && f.target == Target::Conjecture) {
        assert_eq!(soundness_violations(f, insts.iter().copied()).unwrap(), vec![], "{}", f.id);
    }
}

#[test]
fn top_bottom_rows_are_sound() {
    for f in registry().iter().filter(|f| f.target == Target::TopBottom) {
        for m in 3..=30 {
            for x1 in 0..=m - 3 {
                for y1 in 0..=m - 3 {
                    let inst = Instance { m, x1, y1 };
                    if let Some(p) = eval_condition(f, inst) {
                        let w = f.word(&p, inst);
                        assert!(periodic_avoids(&bytes(&w), &f.target.set(inst).unwrap()), "{} ({p}) at {inst:?}", f.id);
                    }
                }
            }
        }
    }
}

#[test]
fn experimental_rows_only_on_request() {
    let inst = ConjectureInstance::new(13, 6, 1).unwrap();
    let experimental: Vec<&str> = registry().iter().filter(|f| f.experimental).map(|f| f.id).collect();
    let plain = match_families(inst, MatchOptions::default()).unwrap();
    assert!(plain.family_ids().iter().all(|id| !experimental.contains(id)));
    assert!(family("mod3-ab-abc").unwrap().experimental);
    let wide = match_families(inst, MatchOptions { experimental: true, search: true }).unwrap();
    assert!(wide.matches.len() >= plain.matches.len());
}

#[test]
fn worked_congruence_example() {
    let inst = ConjectureInstance::new(12, 6, 3).unwrap();
    let report = match_families(inst, MatchOptions::default()).unwrap();
    let hit = report.matches.iter().find(|h| h.family == "ab-alt-bc").unwrap();
    assert_eq!(hit.word.to_string(), "abcbc");
    assert_eq!(hit.params.as_ref().unwrap().to_string(), "p=0, q=2");
}
