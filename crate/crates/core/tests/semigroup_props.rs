mod common;

use clifford_cones::builders::{brandt_b2, chain, cyclic_group, diamond, symmetric_group3};
use clifford_cones::iso::{
    find_isomorphism, verify_isomorphism, verify_morphism, DEFAULT_SEARCH_BUDGET,
};
use clifford_cones::{FiniteSemigroup, GreenStructure};
use proptest::prelude::*;

fn corpus() -> Vec<FiniteSemigroup> {
    common::small_fixtures(12)
        .into_iter()
        .map(|(_, s)| s)
        .collect()
}

#[test]
fn green_matches_divisibility_oracle() {
    for (name, s) in common::small_fixtures(12) {
        let t = common::table(&s);
        let g = GreenStructure::new(&s);
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(
                    g.l_related(a, b),
                    common::l_related(&t, a, b),
                    "{name} L {a} {b}"
                );
                assert_eq!(
                    g.r_related(a, b),
                    common::r_related(&t, a, b),
                    "{name} R {a} {b}"
                );
                assert_eq!(
                    g.d_related(a, b),
                    common::d_related(&t, a, b),
                    "{name} D {a} {b}"
                );
                let h = g.hclass[a] == g.hclass[b];
                assert_eq!(
                    h,
                    g.l_related(a, b) && g.r_related(a, b),
                    "{name} H {a} {b}"
                );
            }
        }
    }
}

#[test]
fn clifford_tests_agree() {
    for (name, s) in common::small_fixtures(12) {
        let g = GreenStructure::new(&s);
        let via_d_classes = s.is_regular() && g.unique_idempotent_per_d_class(&s);
        assert_eq!(s.is_clifford(), via_d_classes, "{name}");
        if s.is_clifford() {
            assert_eq!(g.lclass, g.rclass, "{name}");
            assert_eq!(g.lclass, g.hclass, "{name}");
            assert_eq!(g.lclass, g.dclass, "{name}");
        }
    }
}

#[test]
fn opposite_swaps_left_and_right() {
    for s in corpus() {
        let op = s.opposite();
        assert_eq!(op.opposite(), s);
        let (g, h) = (GreenStructure::new(&s), GreenStructure::new(&op));
        assert_eq!(h.lclass, g.rclass);
        assert_eq!(h.rclass, g.lclass);
    }
    let b2 = brandt_b2().opposite();
    assert_eq!((b2.mul(1, 2), b2.mul(2, 1)), (0, 2));
}

#[test]
fn principal_left_ideals() {
    let g = GreenStructure::new(&chain(2));
    assert_eq!(g.left[0].ones().collect::<Vec<_>>(), vec![0, 1]);
    assert_eq!(g.left[1].ones().collect::<Vec<_>>(), vec![1]);
    let g = GreenStructure::new(&brandt_b2());
    assert_eq!(g.left[1].ones().collect::<Vec<_>>(), vec![0, 1, 3]);
}

#[test]
fn isomorphism_search_matches_brute_force() {
    let small: Vec<FiniteSemigroup> = common::small_fixtures(6)
        .into_iter()
        .map(|(_, s)| s)
        .collect();
    for s in &small {
        for t in &small {
            let fast = find_isomorphism(s, t, DEFAULT_SEARCH_BUDGET).unwrap();
            let slow = common::brute_isomorphism(&common::table(s), &common::table(t));
            assert_eq!(fast.is_some(), slow.is_some(), "{s:?} vs {t:?}");
            if let Some(phi) = fast {
                assert!(verify_isomorphism(s, t, &phi, false));
            }
        }
    }
}

#[test]
fn anti_isomorphisms() {
    let s3 = symmetric_group3();
    // inversion is an anti-automorphism of any group
    let inverse: Vec<usize> = s3
        .elements()
        .map(|a| s3.elements().find(|&b| s3.mul(a, b) == 0).unwrap())
        .collect();
    assert!(verify_morphism(&s3, &s3, &inverse, true));
    assert!(!verify_morphism(&s3, &s3, &[0, 1, 2, 3, 4, 5], true));
    let b2 = brandt_b2();
    let phi = find_isomorphism(&b2, &b2.opposite(), 1000)
        .unwrap()
        .unwrap();
    assert!(verify_isomorphism(&b2, &b2, &phi, true));
}

fn fixture_strategy() -> impl Strategy<Value = FiniteSemigroup> {
    prop_oneof![
        (1usize..=5).prop_map(chain),
        (1usize..=6).prop_map(cyclic_group),
        Just(diamond()),
        Just(symmetric_group3()),
        Just(brandt_b2()),
        Just(clifford_cones::builders::cl5()),
    ]
}

fn relabelled() -> impl Strategy<Value = (FiniteSemigroup, Vec<usize>)> {
    fixture_strategy().prop_flat_map(|s| {
        let n = s.order();
        (Just(s), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn text_format_round_trips((s, perm) in relabelled()) {
        let t = s.relabel(&perm).unwrap();
        prop_assert_eq!(FiniteSemigroup::parse_text(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn relabelled_copies_are_found((s, perm) in relabelled()) {
        let t = s.relabel(&perm).unwrap();
        prop_assert!(verify_isomorphism(&s, &t, &perm, false));
        let phi = find_isomorphism(&s, &t, DEFAULT_SEARCH_BUDGET).unwrap();
        prop_assert!(phi.is_some());
        prop_assert!(verify_isomorphism(&s, &t, &phi.unwrap(), false));
        prop_assert_eq!(s.is_clifford(), t.is_clifford());
    }

    #[test]
    fn parser_never_panics(text in "[0-9 \n#a-z]{0,60}") {
        let _ = FiniteSemigroup::parse_text(&text);
    }
}
