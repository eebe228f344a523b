//! Exhaustive checks over the small descriptor grid.

use std::collections::BTreeSet;

use num_integer::gcd;
use rand::rngs::StdRng;
use rand::SeedableRng;

use braidlift::arrangement::{acts_faithfully_on_arrangement, hyperplanes};
use braidlift::classify::frobenius::frobenius_coset_action;
use braidlift::classify::{
    bieberbach_bruteforce, free_action_general, has_odd_lift_property, is_bieberbach_series,
    odd_lift_bruteforce, FrobeniusSpec,
};
use braidlift::lifting::{
    element_lifts_fast, element_lifts_oracle, obstructions, subgroup_lifts, subgroup_lifts_local,
};
use braidlift::monomial::{center, enumerate, DEFAULT_GUARD};
use braidlift::suite::{cyclic_subgroups, grid, random_element};
use braidlift::{GroupDescriptor, Subgroup};

fn reducible(desc: GroupDescriptor) -> bool {
    ["G(1,1,2)", "G(2,2,2)"].contains(&desc.to_string().as_str())
}

#[test]
fn closure_size_matches_order_formula() {
    for desc in grid() {
        let full = Subgroup::full(desc, DEFAULT_GUARD).unwrap();
        assert_eq!(full.len() as u128, desc.order().unwrap(), "{desc}");
        assert_eq!(enumerate(desc).unwrap().count(), full.len(), "{desc}");
    }
}

#[test]
fn order_formula_matches_iteration() {
    for desc in grid() {
        for w in enumerate(desc).unwrap() {
            assert_eq!(w.order(), w.order_by_iteration(), "{desc} {w}");
        }
    }
}

#[test]
fn arrangement_size() {
    for desc in grid() {
        let r = desc.rank();
        let expected = desc.de() as usize * r * (r - 1) / 2 + if desc.d() >= 2 { r } else { 0 };
        assert_eq!(hyperplanes(desc).len(), expected, "{desc}");
    }
}

#[test]
fn center_size() {
    for desc in grid() {
        let z = center(desc).unwrap();
        if reducible(desc) {
            continue;
        }
        let expected = desc.d() as usize * gcd(desc.e() as usize, desc.rank());
        assert_eq!(z.len(), expected, "{desc}");
    }
    // reducible cases: G(1,1,2) is Z/2, G(2,2,2) is the Klein group
    assert_eq!(center("G(1,1,2)".parse().unwrap()).unwrap().len(), 2);
    assert_eq!(center("G(2,2,2)".parse().unwrap()).unwrap().len(), 4);
}

/// Cyclic subgroups plus subgroups generated by random pairs.
fn test_subgroups(desc: GroupDescriptor, pairs: usize) -> Vec<Subgroup> {
    let mut subs = cyclic_subgroups(desc).unwrap();
    let mut rng = StdRng::seed_from_u64(u64::from(desc.de()) * 31 + desc.rank() as u64);
    let mut seen: BTreeSet<_> = subs.iter().map(|s| s.elements().to_vec()).collect();
    for _ in 0..pairs {
        let gens = [random_element(desc, &mut rng), random_element(desc, &mut rng)];
        let sub = Subgroup::closure(desc, &gens, DEFAULT_GUARD).unwrap();
        if seen.insert(sub.elements().to_vec()) {
            subs.push(sub);
        }
    }
    subs
}

#[test]
fn faithful_iff_center_intersection_trivial() {
    for desc in grid() {
        if hyperplanes(desc).is_empty() {
            continue;
        }
        let z = center(desc).unwrap();
        for sub in test_subgroups(desc, 10) {
            let meets_center = !sub.intersection(&z).unwrap().is_trivial();
            assert_eq!(acts_faithfully_on_arrangement(&sub).unwrap(), !meets_center, "{desc}");
        }
    }
}

#[test]
fn subgroup_criteria() {
    for desc in grid() {
        let z = center(desc).unwrap();
        for sub in test_subgroups(desc, 20) {
            let report = subgroup_lifts(&sub);
            assert_eq!(report.lifts, subgroup_lifts_local(&sub), "{desc}");
            if report.lifts {
                assert!(sub.intersection(&z).unwrap().is_trivial(), "{desc}");
                assert!(sub.len() % 2 == 1 || sub.is_trivial(), "{desc}");
            }
            if free_action_general(&sub) {
                assert!(report.lifts, "free action must lift in {desc}");
            }
        }
    }
}

#[test]
fn element_criteria() {
    for desc in grid() {
        for w in enumerate(desc).unwrap() {
            let oracle = element_lifts_oracle(&w).lifts;
            assert_eq!(oracle, element_lifts_fast(&w), "{desc} {w}");
            if oracle {
                assert_eq!(w.order() % 2, 1, "{desc} {w}");
            }
            if !obstructions(&w).is_empty() {
                assert!(!oracle, "{desc} {w}");
            }
        }
    }
}

#[test]
fn classification_matches_bruteforce() {
    for desc in grid() {
        assert_eq!(is_bieberbach_series(desc), bieberbach_bruteforce(desc).unwrap(), "{desc}");
        assert_eq!(has_odd_lift_property(desc), odd_lift_bruteforce(desc).unwrap(), "{desc}");
    }
    for s in ["G(2,1,1)", "G(4,2,1)", "G(3,1,1)", "G(6,2,1)", "G(8,1,1)", "G(12,12,2)", "G(8,8,2)"]
    {
        let desc: GroupDescriptor = s.parse().unwrap();
        assert_eq!(has_odd_lift_property(desc), odd_lift_bruteforce(desc).unwrap(), "{desc}");
        assert_eq!(is_bieberbach_series(desc), bieberbach_bruteforce(desc).unwrap(), "{desc}");
    }
}

#[test]
fn frobenius_actions() {
    for (p, q) in [(7, 3), (13, 3), (31, 5)] {
        let action =
            frobenius_coset_action(FrobeniusSpec::with_smallest_multiplier(p, q).unwrap()).unwrap();
        assert!(action.faithful, "({p},{q})");
        assert!(action.cycle_structure_ok(), "({p},{q})");
        assert!(action.all_in_f_p, "({p},{q})");
        assert_eq!(action.group.len() as u64, p * q);
    }
}
