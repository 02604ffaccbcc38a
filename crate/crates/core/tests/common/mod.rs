//! Independent oracles. These work from raw multiplication tables and share
//! no code with the library paths they check.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use clifford_cones::{CategoryIso, FiniteSemigroup, Morphism, NormalCategory};
use itertools::Itertools;

pub fn table(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    s.rows()
}

/// `a 𝓛 b` by divisibility: `a = b` or each is a left multiple of the other.
pub fn l_related(t: &[Vec<usize>], a: usize, b: usize) -> bool {
    let n = t.len();
    let divides = |x: usize, y: usize| x == y || (0..n).any(|z| t[z][x] == y);
    divides(a, b) && divides(b, a)
}

pub fn r_related(t: &[Vec<usize>], a: usize, b: usize) -> bool {
    let n = t.len();
    let divides = |x: usize, y: usize| x == y || (0..n).any(|z| t[x][z] == y);
    divides(a, b) && divides(b, a)
}

/// `a 𝓓 b` as `a 𝓛 c 𝓡 b` for some `c`.
pub fn d_related(t: &[Vec<usize>], a: usize, b: usize) -> bool {
    (0..t.len()).any(|c| l_related(t, a, c) && r_related(t, c, b))
}

/// Canonical object list: least idempotent of each L-class with one.
pub fn objects(t: &[Vec<usize>]) -> Vec<usize> {
    let n = t.len();
    let idem: Vec<usize> = (0..n).filter(|&e| t[e][e] == e).collect();
    idem.iter()
        .copied()
        .filter(|&e| idem.iter().all(|&g| g >= e || !l_related(t, e, g)))
        .collect()
}

pub fn hom(t: &[Vec<usize>], e: usize, f: usize) -> Vec<usize> {
    (0..t.len())
        .map(|x| t[t[e][x]][f])
        .sorted()
        .dedup()
        .collect()
}

/// `(e,u,f)` is invertible: some `(f,v,e)` composes to both identities.
pub fn is_iso(t: &[Vec<usize>], e: usize, u: usize, f: usize) -> bool {
    hom(t, f, e)
        .into_iter()
        .any(|v| t[u][v] == e && t[v][u] == f)
}

/// All cones by exhaustive assignment, no pruning: `(apex, components)` in
/// object order.
pub fn all_cones(t: &[Vec<usize>]) -> Vec<(usize, Vec<usize>)> {
    let objs = objects(t);
    let mut out = Vec::new();
    for &d in &objs {
        let choices: Vec<Vec<usize>> = objs.iter().map(|&e| hom(t, e, d)).collect();
        for comps in choices
            .iter()
            .map(|c| c.iter().copied())
            .multi_cartesian_product()
        {
            let compatible = objs.iter().enumerate().all(|(i, &f)| {
                objs.iter()
                    .enumerate()
                    .all(|(j, &g)| t[f][g] != f || t[f][comps[j]] == comps[i])
            });
            let some_iso = objs
                .iter()
                .enumerate()
                .any(|(i, &e)| is_iso(t, e, comps[i], d));
            if compatible && some_iso {
                out.push((d, comps));
            }
        }
    }
    out.sort();
    out
}

/// ρ^a straight from the table: apex the least idempotent L-related to `a`,
/// components `e·a`.
pub fn principal_cone(t: &[Vec<usize>], a: usize) -> (usize, Vec<usize>) {
    let objs = objects(t);
    let apex = *objs.iter().find(|&&e| l_related(t, e, a)).unwrap();
    (apex, objs.iter().map(|&e| t[e][a]).collect())
}

/// Checks a claimed isomorphism from the tables alone: bijective on objects
/// and morphisms, endpoints respected, composition `(e,u,f)(f,v,g) = (e,uv,g)`
/// preserved for every composable pair.
pub fn functorial(source: &NormalCategory, target: &NormalCategory, iso: &CategoryIso) -> bool {
    let objects: HashMap<usize, usize> = iso.object_map.iter().copied().collect();
    let map: HashMap<Morphism, Morphism> = iso.morphism_map.iter().copied().collect();
    let src: HashSet<Morphism> = source.morphisms().collect();
    let tgt: HashSet<Morphism> = target.morphisms().collect();
    let images: HashSet<Morphism> = map.values().copied().collect();
    if objects.len() != source.object_count()
        || objects.values().collect::<HashSet<_>>().len() != target.object_count()
        || map.keys().copied().collect::<HashSet<_>>() != src
        || images != tgt
    {
        return false;
    }
    let (s, t) = (table(source.base()), table(target.base()));
    for x in &src {
        let fx = map[x];
        if objects[&x.src] != fx.src || objects[&x.dst] != fx.dst {
            return false;
        }
        for y in src.iter().filter(|y| y.src == x.dst) {
            let xy = Morphism {
                src: x.src,
                u: s[x.u][y.u],
                dst: y.dst,
            };
            let fy = map[y];
            let composed = Morphism {
                src: fx.src,
                u: t[fx.u][fy.u],
                dst: fy.dst,
            };
            if map[&xy] != composed {
                return false;
            }
        }
    }
    true
}

/// First isomorphism by trying every permutation.
pub fn brute_isomorphism(s: &[Vec<usize>], t: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = s.len();
    if n != t.len() {
        return None;
    }
    (0..n)
        .permutations(n)
        .find(|p| (0..n).all(|a| (0..n).all(|b| p[s[a][b]] == t[p[a]][p[b]])))
}

/// Fixtures of order at most `max`, Clifford or not.
pub fn small_fixtures(max: usize) -> Vec<(String, FiniteSemigroup)> {
    let mut out: Vec<(String, FiniteSemigroup)> = clifford_cones::fixtures::clifford_corpus()
        .into_iter()
        .filter(|(_, s)| s.order() <= max)
        .collect();
    for (name, s) in extra_fixtures() {
        if s.order() <= max {
            out.push((name, s));
        }
    }
    out
}

/// Regular non-Clifford controls alongside B2.
pub fn extra_fixtures() -> Vec<(String, FiniteSemigroup)> {
    let left_zero = FiniteSemigroup::from_fn(3, |a, _| a).unwrap();
    let right_zero = FiniteSemigroup::from_fn(3, |_, b| b).unwrap();
    // 2x2 rectangular band: (i,j)(k,l) = (i,l)
    let rect = FiniteSemigroup::from_fn(4, |a, b| (a / 2) * 2 + b % 2).unwrap();
    // full transformation monoid on two points, "apply a then b"
    let maps = [[0, 1], [0, 0], [1, 1], [1, 0]];
    let t2 = FiniteSemigroup::from_fn(4, |a, b| {
        let composed = [maps[b][maps[a][0]], maps[b][maps[a][1]]];
        maps.iter().position(|m| *m == composed).unwrap()
    })
    .unwrap();
    vec![
        ("t2".into(), t2),
        ("b2".into(), clifford_cones::builders::brandt_b2()),
        ("left-zero3".into(), left_zero),
        ("right-zero3".into(), right_zero),
        ("rect2x2".into(), rect),
    ]
}
