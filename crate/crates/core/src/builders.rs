//! Constructors for semilattices, small groups, strong semilattices of groups
//! and the Brandt semigroup B2.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Meet-semilattice on the chain `0 > 1 > ... > n-1`; the product is `max`.
pub fn chain(n: usize) -> FiniteSemigroup {
    assert!(n >= 1, "chain needs at least one element");
    FiniteSemigroup::from_fn(n, usize::max).expect("max is associative")
}

pub const DIAMOND_TOP: usize = 0;
pub const DIAMOND_A: usize = 1;
pub const DIAMOND_B: usize = 2;
pub const DIAMOND_BOTTOM: usize = 3;

/// Four-element meet-semilattice: top, two incomparable atoms, bottom.
pub fn diamond() -> FiniteSemigroup {
    let rows = vec![
        vec![0, 1, 2, 3],
        vec![1, 1, 3, 3],
        vec![2, 3, 2, 3],
        vec![3, 3, 3, 3],
    ];
    FiniteSemigroup::from_table(
        rows,
        Some(vec!["t".into(), "a".into(), "b".into(), "z".into()]),
    )
    .expect("diamond table is a semilattice")
}

/// Additive group `Z_n`.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    assert!(n >= 1, "cyclic group needs at least one element");
    FiniteSemigroup::from_fn(n, |a, b| (a + b) % n).expect("addition mod n")
}

/// Permutations of `{0,1,2}` in lexicographic order of their one-line
/// notation; index 0 is the identity.
pub const S3_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// `S_3` with `a*b` the permutation "apply `a`, then `b`".
pub fn symmetric_group3() -> FiniteSemigroup {
    let index = |p: [usize; 3]| S3_PERMS.iter().position(|q| *q == p).unwrap();
    FiniteSemigroup::from_fn(6, |a, b| {
        let (p, q) = (S3_PERMS[a], S3_PERMS[b]);
        index([q[p[0]], q[p[1]], q[p[2]]])
    })
    .expect("permutation composition")
}

/// Brandt semigroup B2: `0` is zero, `1..=4` are `(1,1),(1,2),(2,1),(2,2)`.
pub fn brandt_b2() -> FiniteSemigroup {
    let pair = |a: usize| [(1, 1), (1, 2), (2, 1), (2, 2)][a - 1];
    let index = |(i, j): (usize, usize)| 1 + 2 * (i - 1) + (j - 1);
    FiniteSemigroup::from_fn(5, |a, b| {
        if a == 0 || b == 0 {
            return 0;
        }
        let ((i, j), (k, l)) = (pair(a), pair(b));
        if j == k {
            index((i, l))
        } else {
            0
        }
    })
    .expect("Brandt multiplication")
    .with_labels(vec![
        "0".into(),
        "11".into(),
        "12".into(),
        "21".into(),
        "22".into(),
    ])
    .expect("labels")
}

/// One structure map `G_from -> G_to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureMap {
    pub from: usize,
    pub to: usize,
    pub map: Vec<usize>,
}

/// Blueprint for a strong semilattice of groups.
///
/// A structure map is required for every pair with `alpha * beta = beta` in
/// the semilattice, including `alpha == beta`. Validation errors name the
/// position of the offending map in `homs`.
#[derive(Debug, Clone)]
pub struct SlgSpec {
    pub semilattice: FiniteSemigroup,
    pub groups: Vec<FiniteSemigroup>,
    pub homs: Vec<StructureMap>,
}

impl SlgSpec {
    /// A spec with identity maps on the diagonal and every other structure
    /// map sending everything to the identity.
    pub fn trivial_homs(semilattice: FiniteSemigroup, groups: Vec<FiniteSemigroup>) -> Self {
        let mut homs = Vec::new();
        for alpha in semilattice.elements() {
            for beta in semilattice.elements() {
                if semilattice.mul(alpha, beta) != beta
                    || alpha >= groups.len()
                    || beta >= groups.len()
                {
                    continue;
                }
                let map = if alpha == beta {
                    groups[alpha].elements().collect()
                } else {
                    let one = groups[beta].group_identity().unwrap_or(0);
                    vec![one; groups[alpha].order()]
                };
                homs.push(StructureMap {
                    from: alpha,
                    to: beta,
                    map,
                });
            }
        }
        SlgSpec {
            semilattice,
            groups,
            homs,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let y = &self.semilattice;
        if let Some((a, b)) = y.commutativity_witness() {
            return Err(Error::BadSemilattice {
                path: "$.semilattice".into(),
                reason: format!("{a}*{b} != {b}*{a}"),
            });
        }
        if let Some(a) = y.elements().find(|&a| !y.is_idempotent(a)) {
            return Err(Error::BadSemilattice {
                path: "$.semilattice".into(),
                reason: format!("{a} is not idempotent"),
            });
        }
        if self.groups.len() != y.order() {
            return Err(Error::BadGroup {
                path: "$.groups".into(),
                reason: format!(
                    "{} groups for {} semilattice vertices",
                    self.groups.len(),
                    y.order()
                ),
            });
        }
        for (alpha, g) in self.groups.iter().enumerate() {
            if !g.is_group() {
                return Err(Error::BadGroup {
                    path: format!("$.groups[{alpha}]"),
                    reason: "table is not a group".into(),
                });
            }
        }
        let mut lookup: BTreeMap<(usize, usize), &[usize]> = BTreeMap::new();
        for (pos, hom) in self.homs.iter().enumerate() {
            let (alpha, beta, map) = (hom.from, hom.to, &hom.map);
            let path = format!("$.homs[{pos}]");
            if lookup.insert((alpha, beta), map).is_some() {
                return Err(Error::BadHom {
                    path,
                    reason: format!("duplicate map from {alpha} to {beta}"),
                });
            }
            if alpha >= y.order() || beta >= y.order() {
                return Err(Error::BadHom {
                    path,
                    reason: format!("vertex out of range in ({alpha},{beta})"),
                });
            }
            if y.mul(alpha, beta) != beta {
                return Err(Error::BadHom {
                    path,
                    reason: format!("{alpha} is not above {beta}"),
                });
            }
            let (src, dst) = (&self.groups[alpha], &self.groups[beta]);
            if map.len() != src.order() {
                return Err(Error::BadHom {
                    path: format!("{path}.map"),
                    reason: format!("{} images for a group of order {}", map.len(), src.order()),
                });
            }
            if let Some(i) = map.iter().position(|&x| x >= dst.order()) {
                return Err(Error::BadHom {
                    path: format!("{path}.map[{i}]"),
                    reason: format!("image {} outside target group", map[i]),
                });
            }
            if alpha == beta && map.iter().enumerate().any(|(i, &x)| i != x) {
                return Err(Error::BadHom {
                    path: format!("{path}.map"),
                    reason: format!("map from {alpha} to itself must be the identity"),
                });
            }
            for a in src.elements() {
                for b in src.elements() {
                    if map[src.mul(a, b)] != dst.mul(map[a], map[b]) {
                        return Err(Error::BadHom {
                            path: format!("{path}.map"),
                            reason: format!("not a homomorphism at ({a},{b})"),
                        });
                    }
                }
            }
        }
        for alpha in y.elements() {
            for beta in y.elements() {
                if y.mul(alpha, beta) == beta && !lookup.contains_key(&(alpha, beta)) {
                    return Err(Error::MissingHom {
                        from: alpha,
                        to: beta,
                    });
                }
            }
        }
        for high in y.elements() {
            for mid in y.elements() {
                if y.mul(high, mid) != mid {
                    continue;
                }
                for low in y.elements() {
                    if y.mul(mid, low) != low {
                        continue;
                    }
                    let (up, down, direct) = (
                        lookup[&(high, mid)],
                        lookup[&(mid, low)],
                        lookup[&(high, low)],
                    );
                    if up.iter().zip(direct).any(|(&x, &z)| down[x] != z) {
                        return Err(Error::IncoherentHoms { high, mid, low });
                    }
                }
            }
        }
        Ok(())
    }

    /// First carrier index of each vertex group.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.groups
            .iter()
            .map(|g| {
                let start = acc;
                acc += g.order();
                start
            })
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SlgJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let semilattice = FiniteSemigroup::from_table(raw.semilattice, None).map_err(|e| {
            Error::BadSemilattice {
                path: "$.semilattice".into(),
                reason: e.to_string(),
            }
        })?;
        let groups = raw
            .groups
            .into_iter()
            .enumerate()
            .map(|(i, table)| {
                FiniteSemigroup::from_table(table, None).map_err(|e| Error::BadGroup {
                    path: format!("$.groups[{i}]"),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SlgSpec {
            semilattice,
            groups,
            homs: raw.homs,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = SlgJson {
            semilattice: self.semilattice.rows(),
            groups: self.groups.iter().map(FiniteSemigroup::rows).collect(),
            homs: self.homs.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("plain data serializes")
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SlgJson {
    semilattice: Vec<Vec<usize>>,
    groups: Vec<Vec<Vec<usize>>>,
    homs: Vec<StructureMap>,
}

impl SlgSpec {
    /// Structure map lookup; only meaningful after validation.
    pub fn hom(&self, from: usize, to: usize) -> Option<&[usize]> {
        self.homs
            .iter()
            .find(|h| h.from == from && h.to == to)
            .map(|h| h.map.as_slice())
    }

    /// Replaces (or adds) the map `from -> to`.
    pub fn set_hom(&mut self, from: usize, to: usize, map: Vec<usize>) {
        match self.homs.iter_mut().find(|h| h.from == from && h.to == to) {
            Some(h) => h.map = map,
            None => self.homs.push(StructureMap { from, to, map }),
        }
    }
}

/// Carrier: the disjoint union of the vertex groups in vertex order. For
/// `a` in `G_alpha` and `b` in `G_beta` the product is computed in
/// `G_{alpha beta}` after pushing both factors down.
pub fn strong_semilattice_of_groups(spec: &SlgSpec) -> Result<FiniteSemigroup> {
    spec.validate()?;
    let offsets = spec.offsets();
    let total: usize = spec.groups.iter().map(FiniteSemigroup::order).sum();
    let mut vertex = Vec::with_capacity(total);
    for (alpha, g) in spec.groups.iter().enumerate() {
        vertex.extend(std::iter::repeat_n(alpha, g.order()));
    }
    let y = &spec.semilattice;
    let lookup: BTreeMap<(usize, usize), &[usize]> = spec
        .homs
        .iter()
        .map(|h| ((h.from, h.to), h.map.as_slice()))
        .collect();
    FiniteSemigroup::from_fn(total, |a, b| {
        let (alpha, beta) = (vertex[a], vertex[b]);
        let meet = y.mul(alpha, beta);
        let x = lookup[&(alpha, meet)][a - offsets[alpha]];
        let z = lookup[&(beta, meet)][b - offsets[beta]];
        offsets[meet] + spec.groups[meet].mul(x, z)
    })
}

/// Chain(2) with `Z2` on top and `Z3` at the bottom, trivial structure map.
pub fn cl5() -> FiniteSemigroup {
    let spec = SlgSpec::trivial_homs(chain(2), vec![cyclic_group(2), cyclic_group(3)]);
    strong_semilattice_of_groups(&spec).expect("cl5 spec is valid")
}
