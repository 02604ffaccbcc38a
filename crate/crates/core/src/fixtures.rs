//! Named semigroups used by the CLI and the test corpus.

use crate::builders::{
    brandt_b2, chain, cl5, cyclic_group, diamond, strong_semilattice_of_groups, symmetric_group3,
    SlgSpec, S3_PERMS,
};
use crate::semigroup::FiniteSemigroup;

/// Group ingredients for two-vertex strong semilattices.
pub const GROUP_NAMES: [&str; 4] = ["z1", "z2", "z3", "s3"];

fn group(name: &str) -> Option<FiniteSemigroup> {
    match name {
        "z1" => Some(cyclic_group(1)),
        "z2" => Some(cyclic_group(2)),
        "z3" => Some(cyclic_group(3)),
        "s3" => Some(symmetric_group3()),
        _ => None,
    }
}

/// Sign of each element of `S3`, as an element of `Z2`.
fn s3_sign() -> Vec<usize> {
    S3_PERMS
        .iter()
        .map(|p| {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            inversions % 2
        })
        .collect()
}

/// The preferred structure map `top -> bottom` between two named groups:
/// identity, sign, or an inclusion where one exists, trivial otherwise.
fn preferred_hom(top: &str, bottom: &str) -> Option<Vec<usize>> {
    match (top, bottom) {
        (a, b) if a == b => Some(group(a)?.elements().collect()),
        ("s3", "z2") => Some(s3_sign()),
        // transposition [1,0,2] has index 2
        ("z2", "s3") => Some(vec![0, 2]),
        // 3-cycles [1,2,0], [2,0,1] have indices 3, 4
        ("z3", "s3") => Some(vec![0, 3, 4]),
        _ => None,
    }
}

/// Chain(2) with `top` over `bottom`. Without `trivial`, uses the preferred
/// structure map.
pub fn slg_pair(top: &str, bottom: &str, trivial: bool) -> Option<FiniteSemigroup> {
    let mut spec = SlgSpec::trivial_homs(chain(2), vec![group(top)?, group(bottom)?]);
    if !trivial {
        if let Some(map) = preferred_hom(top, bottom) {
            spec.set_hom(0, 1, map);
        }
    }
    Some(strong_semilattice_of_groups(&spec).expect("fixture specs are valid"))
}

/// Resolves a fixture name: `b2`, `cl5`, `diamond`, `s3`, `cN`/`chainN`,
/// `zN`, or `slg-TOP-BOTTOM[-trivial]` with groups from [`GROUP_NAMES`].
pub fn fixture(name: &str) -> Option<FiniteSemigroup> {
    let name = name.to_ascii_lowercase();
    match name.as_str() {
        "b2" => return Some(brandt_b2()),
        "cl5" => return Some(cl5()),
        "diamond" => return Some(diamond()),
        "s3" => return Some(symmetric_group3()),
        _ => {}
    }
    let sized = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix)?
            .parse::<usize>()
            .ok()
            .filter(|&n| (1..=64).contains(&n))
    };
    if let Some(n) = sized("chain").or_else(|| sized("c")) {
        return Some(chain(n));
    }
    if let Some(n) = sized("z") {
        return Some(cyclic_group(n));
    }
    let parts: Vec<&str> = name.split('-').collect();
    match parts.as_slice() {
        ["slg", top, bottom] => slg_pair(top, bottom, false),
        ["slg", top, bottom, "trivial"] => slg_pair(top, bottom, true),
        _ => None,
    }
}

/// The Clifford corpus: chains 1..4, the diamond, `Z2`, `Z3`, `S3`, `CL5`,
/// and every two-vertex strong semilattice over the named groups, with the
/// trivial-map variant added wherever the preferred map is not trivial.
pub fn clifford_corpus() -> Vec<(String, FiniteSemigroup)> {
    let mut out: Vec<(String, FiniteSemigroup)> = Vec::new();
    for n in 1..=4 {
        out.push((format!("chain{n}"), chain(n)));
    }
    for name in ["diamond", "z2", "z3", "s3", "cl5"] {
        out.push((name.to_owned(), fixture(name).unwrap()));
    }
    for top in GROUP_NAMES {
        for bottom in GROUP_NAMES {
            let name = format!("slg-{top}-{bottom}");
            out.push((name.clone(), fixture(&name).unwrap()));
            let trivial = slg_pair(top, bottom, true).unwrap();
            if preferred_hom(top, bottom).is_some() && top != "z1" && bottom != "z1" {
                out.push((format!("{name}-trivial"), trivial));
            }
        }
    }
    out
}

pub fn semilattice_corpus() -> Vec<(String, FiniteSemigroup)> {
    let mut out: Vec<(String, FiniteSemigroup)> =
        (1..=4).map(|n| (format!("chain{n}"), chain(n))).collect();
    out.push(("diamond".into(), diamond()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(fixture("c2"), Some(chain(2)));
        assert_eq!(fixture("chain3"), Some(chain(3)));
        assert_eq!(fixture("Z3"), Some(cyclic_group(3)));
        assert_eq!(fixture("slg-z2-z3"), Some(cl5()));
        assert_eq!(fixture("slg-z1-z1"), Some(chain(2)));
        assert!(fixture("slg-q8-z2").is_none());
        assert!(fixture("c0").is_none());
        assert!(fixture("nope").is_none());
    }

    #[test]
    fn sign_is_a_homomorphism() {
        let s3 = symmetric_group3();
        let z2 = cyclic_group(2);
        let sign = s3_sign();
        assert!(crate::iso::verify_morphism(&s3, &z2, &sign, false));
        assert_eq!(sign.iter().filter(|&&x| x == 1).count(), 3);
    }

    #[test]
    fn corpus_is_clifford_and_small() {
        let corpus = clifford_corpus();
        assert!(corpus
            .iter()
            .all(|(_, s)| s.is_clifford() && s.order() <= 12));
        assert!(corpus.iter().any(|(n, _)| n == "slg-s3-s3"));
        assert!(corpus.iter().any(|(n, _)| n == "slg-s3-z2-trivial"));
    }
}
