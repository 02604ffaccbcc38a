//! Normal cones in `L(S)`.
//!
//! A cone with apex `Sd` picks one morphism `Se -> Sd` per object, compatible
//! with inclusions and with at least one isomorphic component. Since every
//! component ends at the apex, a cone is stored as the apex plus the
//! translation element of each component, in object order.

use rayon::prelude::*;
use serde::Serialize;

use crate::category::{Morphism, NormalCategory};
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NormalCone {
    pub apex: usize,
    /// `components[i]` is `u` in the component `(objects[i], u, apex)`.
    pub components: Vec<usize>,
}

impl NormalCone {
    pub fn component(&self, c: &NormalCategory, i: usize) -> Morphism {
        Morphism::new(c.objects()[i], self.components[i], self.apex)
    }

    pub fn morphisms(&self, c: &NormalCategory) -> Vec<Morphism> {
        (0..self.components.len())
            .map(|i| self.component(c, i))
            .collect()
    }

    /// Component at a canonical object.
    pub fn at(&self, c: &NormalCategory, e: usize) -> Option<Morphism> {
        c.position(e).map(|i| self.component(c, i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConeCondition {
    /// A component is missing or lies in the wrong hom-set.
    Totality,
    /// `ι(Sf,Sg) γ(Sg) != γ(Sf)`.
    Compatibility,
    /// No component is an isomorphism.
    Isomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeViolation {
    pub condition: ConeCondition,
    pub objects: Vec<usize>,
}

/// Checks a candidate given in object order. `Ok(None)` means valid.
pub fn validate_cone(c: &NormalCategory, candidate: &[Morphism]) -> Result<Option<ConeViolation>> {
    let Some(first) = candidate.first() else {
        return Ok(Some(ConeViolation {
            condition: ConeCondition::Totality,
            objects: c.objects().to_vec(),
        }));
    };
    if let Some(other) = candidate.iter().find(|m| m.dst != first.dst) {
        return Err(Error::MixedApex {
            first: first.dst,
            other: other.dst,
        });
    }
    let objects = c.objects();
    if candidate.len() != objects.len() {
        let missing = objects[candidate.len().min(objects.len())..].to_vec();
        return Ok(Some(ConeViolation {
            condition: ConeCondition::Totality,
            objects: missing,
        }));
    }
    if let Some((i, _)) = candidate
        .iter()
        .enumerate()
        .find(|&(i, m)| m.src != objects[i] || !c.contains(*m))
    {
        return Ok(Some(ConeViolation {
            condition: ConeCondition::Totality,
            objects: vec![objects[i]],
        }));
    }
    for (i, &f) in objects.iter().enumerate() {
        for (j, &g) in objects.iter().enumerate() {
            if i == j || !c.included_at(i, j) {
                continue;
            }
            let through = c.compose(c.inclusion(f, g)?, candidate[j])?;
            if through != candidate[i] {
                return Ok(Some(ConeViolation {
                    condition: ConeCondition::Compatibility,
                    objects: vec![f, g],
                }));
            }
        }
    }
    if !candidate.iter().any(|&m| c.is_iso(m)) {
        return Ok(Some(ConeViolation {
            condition: ConeCondition::Isomorphism,
            objects: Vec::new(),
        }));
    }
    Ok(None)
}

pub fn is_valid_cone(c: &NormalCategory, cone: &NormalCone) -> bool {
    matches!(validate_cone(c, &cone.morphisms(c)), Ok(None))
}

/// `ρ^a`: apex `Sf` with `f 𝓛 a`, component `ρ(e, ea, f)` at `Se`.
pub fn principal_cone(c: &NormalCategory, a: usize) -> NormalCone {
    let s = c.base();
    let apex = c
        .object_of(a)
        .expect("regular: every L-class has an idempotent");
    NormalCone {
        apex,
        components: c.objects().iter().map(|&e| s.mul(e, a)).collect(),
    }
}

/// Diagrammatic cone product `γ·δ`: `(γ·δ)(Se) = γ(Se) ; (δ(Sc))°` where
/// `Sc` is the apex of `γ` and `(-)°` is the epimorphic part.
pub fn cone_product(c: &NormalCategory, gamma: &NormalCone, delta: &NormalCone) -> NormalCone {
    let s = c.base();
    let at_apex = delta
        .at(c, gamma.apex)
        .expect("apex of a cone is an object");
    let (epi, _) = c
        .epimorphic_part(at_apex)
        .expect("cone components lie in their hom-sets");
    NormalCone {
        apex: epi.dst,
        components: gamma.components.iter().map(|&u| s.mul(u, epi.u)).collect(),
    }
}

/// For each pair of object positions `(i, j)`, the translation elements of
/// the isomorphisms `Se_i -> Se_j`.
#[derive(Debug, Clone)]
pub struct IsoTable {
    isos: Vec<Vec<Vec<usize>>>,
}

impl IsoTable {
    pub fn new(c: &NormalCategory) -> Self {
        let objects = c.objects();
        let isos = objects
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                objects
                    .iter()
                    .enumerate()
                    .map(|(j, &f)| {
                        c.hom_at(i, j)
                            .iter()
                            .copied()
                            .filter(|&u| c.is_iso(Morphism::new(e, u, f)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        IsoTable { isos }
    }

    pub fn is_iso_at(&self, i: usize, j: usize, u: usize) -> bool {
        self.isos[i][j].binary_search(&u).is_ok()
    }

    pub fn any_at(&self, i: usize, j: usize) -> bool {
        !self.isos[i][j].is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    /// Sorted by apex, then components.
    pub cones: Vec<NormalCone>,
    /// Component assignments tried, per apex position.
    pub visited: Vec<u64>,
}

struct ApexSearch<'a> {
    c: &'a NormalCategory,
    isos: &'a IsoTable,
    apex: usize,
    order: Vec<usize>,
    /// Strict supersets of each object, by position.
    parents: Vec<Vec<usize>>,
    /// Can some object at or after this step of `order` carry an iso?
    iso_possible: Vec<bool>,
    assignment: Vec<usize>,
    found: Vec<NormalCone>,
    visited: u64,
    budget: u64,
}

impl ApexSearch<'_> {
    fn step(&mut self, depth: usize, have_iso: bool) -> Result<()> {
        if !have_iso && !self.iso_possible[depth] {
            return Ok(());
        }
        if depth == self.order.len() {
            self.found.push(NormalCone {
                apex: self.c.objects()[self.apex],
                components: self.assignment.clone(),
            });
            return Ok(());
        }
        let k = self.order[depth];
        let e = self.c.objects()[k];
        let s = self.c.base();
        let candidates: Vec<usize> = match self.parents[k].split_first() {
            Some((&p, rest)) => {
                let forced = s.mul(e, self.assignment[p]);
                if rest.iter().any(|&q| s.mul(e, self.assignment[q]) != forced) {
                    return Ok(());
                }
                vec![forced]
            }
            None => self.c.hom_at(k, self.apex).to_vec(),
        };
        for u in candidates {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::EnumerationBudgetExceeded {
                    apex: self.c.objects()[self.apex],
                    visited: self.visited,
                });
            }
            self.assignment[k] = u;
            let iso = have_iso || self.isos.is_iso_at(k, self.apex, u);
            self.step(depth + 1, iso)?;
        }
        Ok(())
    }
}

/// Every normal cone of `c`, found by backtracking per apex. Maximal objects
/// branch over their hom-set into the apex; every smaller object has its
/// component forced by inclusion compatibility.
pub fn enumerate_cones(c: &NormalCategory, budget: u64) -> Result<Enumeration> {
    let isos = IsoTable::new(c);
    enumerate_with(c, &isos, budget)
}

pub fn enumerate_with(c: &NormalCategory, isos: &IsoTable, budget: u64) -> Result<Enumeration> {
    let m = c.object_count();
    let order = c.top_down_order();
    let parents: Vec<Vec<usize>> = (0..m)
        .map(|k| {
            order
                .iter()
                .copied()
                .filter(|&p| p != k && c.included_at(k, p))
                .collect()
        })
        .collect();
    let per_apex: Vec<(Vec<NormalCone>, u64)> = (0..m)
        .into_par_iter()
        .map(|apex| {
            let mut iso_possible = vec![false; m + 1];
            for depth in (0..m).rev() {
                iso_possible[depth] = iso_possible[depth + 1] || isos.any_at(order[depth], apex);
            }
            let mut search = ApexSearch {
                c,
                isos,
                apex,
                order: order.clone(),
                parents: parents.clone(),
                iso_possible,
                assignment: vec![0; m],
                found: Vec::new(),
                visited: 0,
                budget,
            };
            search.step(0, false)?;
            let mut found = search.found;
            found.sort();
            Ok((found, search.visited))
        })
        .collect::<Result<_>>()?;
    let mut cones = Vec::new();
    let mut visited = Vec::with_capacity(m);
    for (found, v) in per_apex {
        cones.extend(found);
        visited.push(v);
    }
    Ok(Enumeration { cones, visited })
}
