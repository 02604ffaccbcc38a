mod common;

use clifford_cones::builders::brandt_b2;
use clifford_cones::category::{Morphism, NormalCategory, Side};

fn regular_fixtures() -> Vec<(String, clifford_cones::FiniteSemigroup)> {
    common::small_fixtures(12)
        .into_iter()
        .filter(|(_, s)| s.is_regular())
        .collect()
}

#[test]
fn hom_sets_are_the_sets_esf() {
    for (name, s) in regular_fixtures() {
        let t = common::table(&s);
        let c = NormalCategory::build_l(&s).unwrap();
        assert_eq!(c.objects(), common::objects(&t).as_slice(), "{name}");
        for &e in c.objects() {
            for &f in c.objects() {
                assert_eq!(
                    c.hom(e, f).unwrap(),
                    common::hom(&t, e, f).as_slice(),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn composition_is_associative_with_identities() {
    for (name, s) in regular_fixtures() {
        let c = NormalCategory::build_l(&s).unwrap();
        let all: Vec<Morphism> = c.morphisms().collect();
        for &x in &all {
            assert_eq!(
                c.compose(Morphism::identity(x.src), x).unwrap(),
                x,
                "{name}"
            );
            assert_eq!(
                c.compose(x, Morphism::identity(x.dst)).unwrap(),
                x,
                "{name}"
            );
            for y in all.iter().filter(|y| y.src == x.dst) {
                let xy = c.compose(x, *y).unwrap();
                assert!(c.contains(xy), "{name}: {x};{y} escaped");
                for z in all.iter().filter(|z| z.src == y.dst) {
                    let left = c.compose(xy, *z).unwrap();
                    let right = c.compose(x, c.compose(*y, *z).unwrap()).unwrap();
                    assert_eq!(left, right, "{name}");
                }
            }
        }
    }
}

#[test]
fn morphisms_act_as_right_translations() {
    for (name, s) in regular_fixtures() {
        let c = NormalCategory::build_l(&s).unwrap();
        for m in c.morphisms() {
            for x in c.principal_left_ideal(m.src).ones() {
                let y = c.apply(m, x).unwrap();
                assert!(c.principal_left_ideal(m.dst).contains(y), "{name}");
            }
        }
    }
}

#[test]
fn inclusions_compose_and_fix_points() {
    for (name, s) in regular_fixtures() {
        let c = NormalCategory::build_l(&s).unwrap();
        let objs = c.objects();
        for &f in objs {
            assert_eq!(c.inclusion(f, f).unwrap(), Morphism::identity(f));
            for &g in objs {
                let Ok(fg) = c.inclusion(f, g) else { continue };
                for x in c.principal_left_ideal(f).ones() {
                    assert_eq!(c.apply(fg, x).unwrap(), x, "{name}");
                }
                for &h in objs {
                    if let Ok(gh) = c.inclusion(g, h) {
                        assert_eq!(c.compose(fg, gh).unwrap(), c.inclusion(f, h).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn epimorphic_parts_recompose() {
    for (name, s) in regular_fixtures() {
        let c = NormalCategory::build_l(&s).unwrap();
        for m in c.morphisms() {
            let (epi, inc) = c.epimorphic_part(m).unwrap();
            assert_eq!(c.compose(epi, inc).unwrap(), m, "{name}");
            assert!(c.green().l_related(epi.u, epi.dst), "{name}");
            if c.green().l_related(m.u, m.dst) {
                assert_eq!(inc, Morphism::identity(m.dst), "{name}");
            }
        }
    }
}

#[test]
fn isomorphisms_are_the_l_and_r_related_translations() {
    // checked as a property rather than assumed by is_iso
    for (name, s) in regular_fixtures() {
        let c = NormalCategory::build_l(&s).unwrap();
        let g = c.green();
        for m in c.morphisms() {
            let shortcut = g.r_related(m.u, m.src) && g.l_related(m.u, m.dst);
            assert_eq!(c.is_iso(m), shortcut, "{name}: {m}");
        }
        for &e in c.objects() {
            for &f in c.objects() {
                assert_eq!(c.objects_isomorphic(e, f), g.d_related(e, f), "{name}");
            }
        }
    }
}

#[test]
fn canonicalize_is_idempotent_and_respects_l_classes() {
    for (name, s) in regular_fixtures() {
        let c = NormalCategory::build_l(&s).unwrap();
        for m in c.morphisms() {
            assert_eq!(c.canonicalize(m.src, m.u, m.dst).unwrap(), m, "{name}");
        }
        for e in s.idempotents() {
            for f in s.idempotents() {
                for u in s.elements() {
                    if let Ok(m) = c.canonicalize(e, u, f) {
                        assert!(c.contains(m), "{name}");
                        assert!(c.green().l_related(m.src, e) && c.green().l_related(m.dst, f));
                    }
                }
            }
        }
    }
}

#[test]
fn right_category_is_left_category_of_opposite() {
    for (name, s) in regular_fixtures() {
        let r = NormalCategory::build_r(&s).unwrap();
        let l_op = NormalCategory::build_l(&s.opposite()).unwrap();
        assert_eq!(r.side(), Side::Right);
        assert_eq!(r.objects(), l_op.objects(), "{name}");
        assert_eq!(
            r.morphisms().collect::<Vec<_>>(),
            l_op.morphisms().collect::<Vec<_>>()
        );
    }
}

#[test]
fn brandt_right_category_mirrors_left() {
    let b2 = brandt_b2();
    let (l, r) = (
        NormalCategory::build_l(&b2).unwrap(),
        NormalCategory::build_r(&b2).unwrap(),
    );
    let sizes = |c: &NormalCategory| {
        let mut v: Vec<usize> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| c.hom_at(i, j).len())
            .collect();
        v.sort();
        v
    };
    assert_eq!(sizes(&l), sizes(&r));
    assert_eq!(l.morphism_count(), r.morphism_count());
}

#[test]
fn json_export_is_stable() {
    let c = NormalCategory::build_l(&clifford_cones::builders::chain(2)).unwrap();
    let text = serde_json::to_string(&c.to_json()).unwrap();
    assert_eq!(
        text,
        r#"{"homs":[{"dst":0,"elements":[0,1],"src":0},{"dst":1,"elements":[1],"src":0},{"dst":0,"elements":[1],"src":1},{"dst":1,"elements":[1],"src":1}],"inclusions":[[0,0],[1,0],[1,1]],"objects":[{"ideal":[0,1],"idempotent":0},{"ideal":[1],"idempotent":1}],"order":2,"side":"left"}"#
    );
}
