//! Normal duals and isomorphisms between normal categories.
//!
//! The normal dual of `L(S)` is modelled concretely as `R(TL(S))`, and that
//! of `R(S)` as `R(TR(S))` where `TR(S)` is the cone semigroup of `R(S)`.
//! Category isomorphisms are built by transporting structure along a
//! semigroup isomorphism between the underlying bases; [`functor_search`] is
//! an independent brute-force route used to cross-check the transport on
//! small categories.

use std::collections::HashMap;

use serde::Serialize;

use crate::category::{Morphism, NormalCategory};
use crate::error::{Error, Result};
use crate::iso::verify_isomorphism;
use crate::tl::TlSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoryIso {
    /// `(source object, target object)`, in source object order.
    pub object_map: Vec<(usize, usize)>,
    /// `(source morphism, target morphism)`, sorted by source.
    pub morphism_map: Vec<(Morphism, Morphism)>,
    pub verified: bool,
}

impl CategoryIso {
    pub fn map_object(&self, e: usize) -> Option<usize> {
        self.object_map
            .iter()
            .find(|(s, _)| *s == e)
            .map(|&(_, t)| t)
    }

    pub fn map_morphism(&self, m: Morphism) -> Option<Morphism> {
        self.morphism_map
            .binary_search_by(|(s, _)| s.cmp(&m))
            .ok()
            .map(|i| self.morphism_map[i].1)
    }

    pub fn inverse(&self) -> CategoryIso {
        let mut object_map: Vec<_> = self.object_map.iter().map(|&(s, t)| (t, s)).collect();
        object_map.sort_unstable();
        let mut morphism_map: Vec<_> = self.morphism_map.iter().map(|&(s, t)| (t, s)).collect();
        morphism_map.sort_unstable();
        CategoryIso {
            object_map,
            morphism_map,
            verified: false,
        }
    }
}

/// Checks that the maps form an isomorphism of normal categories: bijective
/// on objects and on every hom-set, order-preserving both ways, and
/// functorial on identities, inclusions and every composable pair.
pub fn check_category_iso(
    source: &NormalCategory,
    target: &NormalCategory,
    iso: &CategoryIso,
) -> std::result::Result<(), String> {
    let m = source.object_count();
    if m != target.object_count() || iso.object_map.len() != m {
        return Err(format!(
            "object counts differ: {} vs {}",
            m,
            target.object_count()
        ));
    }
    let mut obj = Vec::with_capacity(m);
    let mut hit = vec![false; m];
    for (i, &(s, t)) in iso.object_map.iter().enumerate() {
        if s != source.objects()[i] {
            return Err(format!("object map is not in source order at {s}"));
        }
        let j = target
            .position(t)
            .ok_or_else(|| format!("{t} is not an object of the target"))?;
        if std::mem::replace(&mut hit[j], true) {
            return Err(format!("object {t} is hit twice"));
        }
        obj.push(j);
    }
    for i in 0..m {
        for j in 0..m {
            if source.included_at(i, j) != target.included_at(obj[i], obj[j]) {
                return Err(format!(
                    "inclusion between {} and {} is not preserved",
                    source.objects()[i],
                    source.objects()[j]
                ));
            }
        }
    }
    let map: HashMap<Morphism, Morphism> = iso.morphism_map.iter().copied().collect();
    if map.len() != source.morphism_count() || iso.morphism_map.len() != map.len() {
        return Err("morphism map does not cover the source exactly once".into());
    }
    let image = |x: Morphism| {
        map.get(&x)
            .copied()
            .ok_or_else(|| format!("{x} has no image"))
    };
    for (i, &e) in source.objects().iter().enumerate() {
        for (j, &f) in source.objects().iter().enumerate() {
            let (te, tf) = (target.objects()[obj[i]], target.objects()[obj[j]]);
            let mut seen = Vec::new();
            for x in source.hom_morphisms(e, f).map_err(|e| e.to_string())? {
                let y = image(x)?;
                if y.src != te || y.dst != tf || !target.contains(y) {
                    return Err(format!("{x} maps to {y} outside hom({te},{tf})"));
                }
                seen.push(y.u);
            }
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != target.hom_at(obj[i], obj[j]).len() {
                return Err(format!("hom({e},{f}) is not mapped bijectively"));
            }
        }
        if image(Morphism::identity(e))? != Morphism::identity(target.objects()[obj[i]]) {
            return Err(format!("identity at {e} is not preserved"));
        }
        for (j, &f) in source.objects().iter().enumerate() {
            if source.included_at(i, j) {
                let want = Morphism::new(
                    target.objects()[obj[i]],
                    target.objects()[obj[i]],
                    target.objects()[obj[j]],
                );
                if image(Morphism::new(e, e, f))? != want {
                    return Err(format!("inclusion ({e},{e},{f}) is not preserved"));
                }
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let (e, f, g) = (
                    source.objects()[i],
                    source.objects()[j],
                    source.objects()[k],
                );
                for &u in source.hom_at(i, j) {
                    for &v in source.hom_at(j, k) {
                        let (x, y) = (Morphism::new(e, u, f), Morphism::new(f, v, g));
                        let lhs = image(source.compose(x, y).map_err(|e| e.to_string())?)?;
                        let rhs = target
                            .compose(image(x)?, image(y)?)
                            .map_err(|e| e.to_string())?;
                        if lhs != rhs {
                            return Err(format!("composition of {x} and {y} is not preserved"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Transports the category structure along a semigroup isomorphism
/// `phi: source.base() -> target.base()`.
pub fn induced_category_iso(
    phi: &[usize],
    source: &NormalCategory,
    target: &NormalCategory,
) -> Result<CategoryIso> {
    if !verify_isomorphism(source.base(), target.base(), phi, false) {
        return Err(Error::NotAnIsomorphism(
            "map is not an isomorphism between the category bases".into(),
        ));
    }
    let object_map = source
        .objects()
        .iter()
        .map(|&e| {
            let t = target
                .object_of(phi[e])
                .expect("isomorphisms send idempotents to idempotents");
            (e, t)
        })
        .collect();
    let morphism_map = source
        .morphisms()
        .map(|m| {
            let image = target.canonicalize(phi[m.src], phi[m.u], phi[m.dst])?;
            Ok((m, image))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut iso = CategoryIso {
        object_map,
        morphism_map,
        verified: false,
    };
    check_category_iso(source, target, &iso).map_err(Error::FunctorialityFailed)?;
    iso.verified = true;
    Ok(iso)
}

struct FunctorSearch<'a> {
    source: &'a NormalCategory,
    target: &'a NormalCategory,
    src_list: Vec<Morphism>,
    src_id: HashMap<Morphism, usize>,
    tgt_id: HashMap<Morphism, usize>,
    obj: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
    tgt_list: Vec<Morphism>,
    nodes: u64,
    budget: u64,
}

impl FunctorSearch<'_> {
    fn expected_hom(&self, m: Morphism) -> (usize, usize) {
        let t = self.target.objects();
        (
            t[self.obj[self.source.position(m.src).unwrap()]],
            t[self.obj[self.source.position(m.dst).unwrap()]],
        )
    }

    fn set(&mut self, a: usize, x: usize) -> bool {
        if let Some(y) = self.map[a] {
            return y == x;
        }
        let (te, tf) = self.expected_hom(self.src_list[a]);
        let image = self.tgt_list[x];
        if self.used[x] || image.src != te || image.dst != tf {
            return false;
        }
        self.map[a] = Some(x);
        self.used[x] = true;
        self.trail.push(a);
        true
    }

    fn assign(&mut self, a: usize, x: usize) -> bool {
        let mut cursor = self.trail.len();
        if !self.set(a, x) {
            return false;
        }
        while cursor < self.trail.len() {
            let a = self.trail[cursor];
            for j in 0..=cursor {
                let b = self.trail[j];
                for (p, q) in [(a, b), (b, a)] {
                    let (mp, mq) = (self.src_list[p], self.src_list[q]);
                    if mp.dst != mq.src {
                        continue;
                    }
                    let composite = self.source.compose(mp, mq).unwrap();
                    let image = self
                        .target
                        .compose(
                            self.tgt_list[self.map[p].unwrap()],
                            self.tgt_list[self.map[q].unwrap()],
                        )
                        .unwrap();
                    let (c, i) = (self.src_id[&composite], self.tgt_id[&image]);
                    if !self.set(c, i) {
                        return false;
                    }
                }
            }
            cursor += 1;
        }
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let a = self.trail.pop().unwrap();
            let x = self.map[a].take().unwrap();
            self.used[x] = false;
        }
    }

    fn run(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        let Some(a) = self.map.iter().position(Option::is_none) else {
            return Ok(true);
        };
        let (te, tf) = self.expected_hom(self.src_list[a]);
        let candidates: Vec<usize> = self
            .target
            .hom(te, tf)
            .unwrap()
            .iter()
            .map(|&u| self.tgt_id[&Morphism::new(te, u, tf)])
            .collect();
        for x in candidates {
            if self.used[x] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(a, x) && self.run()? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Searches directly for a category isomorphism, without reference to the
/// underlying semigroups: object bijections in lexicographic order, then a
/// backtracking assignment of morphism images closed under composition.
/// Meant for categories with a handful of objects.
pub fn functor_search(
    source: &NormalCategory,
    target: &NormalCategory,
    budget: u64,
) -> Result<Option<CategoryIso>> {
    let m = source.object_count();
    if m != target.object_count() || source.morphism_count() != target.morphism_count() {
        return Ok(None);
    }
    let src_list: Vec<Morphism> = source.morphisms().collect();
    let tgt_list: Vec<Morphism> = target.morphisms().collect();
    let src_id: HashMap<Morphism, usize> =
        src_list.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let tgt_id: HashMap<Morphism, usize> =
        tgt_list.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut nodes = 0;
    for perm in permutations(m) {
        let shape_ok = (0..m).all(|i| {
            (0..m).all(|j| {
                source.included_at(i, j) == target.included_at(perm[i], perm[j])
                    && source.hom_at(i, j).len() == target.hom_at(perm[i], perm[j]).len()
            })
        });
        if !shape_ok {
            continue;
        }
        let mut search = FunctorSearch {
            source,
            target,
            src_list: src_list.clone(),
            src_id: src_id.clone(),
            tgt_id: tgt_id.clone(),
            obj: perm.clone(),
            map: vec![None; src_list.len()],
            used: vec![false; tgt_list.len()],
            trail: Vec::new(),
            tgt_list: tgt_list.clone(),
            nodes,
            budget,
        };
        // identities and inclusions are fixed by the object bijection
        let mut ok = true;
        for i in 0..m {
            for j in 0..m {
                if ok && source.included_at(i, j) {
                    let (e, f) = (source.objects()[i], source.objects()[j]);
                    let (te, tf) = (target.objects()[perm[i]], target.objects()[perm[j]]);
                    ok = search.assign(
                        src_id[&Morphism::new(e, e, f)],
                        tgt_id[&Morphism::new(te, te, tf)],
                    );
                }
            }
        }
        let found = ok && search.run()?;
        nodes = search.nodes;
        if found {
            let morphism_map = src_list
                .iter()
                .enumerate()
                .map(|(a, &x)| (x, tgt_list[search.map[a].unwrap()]))
                .collect();
            let object_map = (0..m)
                .map(|i| (source.objects()[i], target.objects()[perm[i]]))
                .collect();
            let mut iso = CategoryIso {
                object_map,
                morphism_map,
                verified: false,
            };
            iso.verified = check_category_iso(source, target, &iso).is_ok();
            return Ok(Some(iso));
        }
    }
    Ok(None)
}

/// `N*L(S)` as `R(TL(S))`, with the cone semigroup it was built from.
pub fn normal_dual_l(l: &NormalCategory, budget: u64) -> Result<(NormalCategory, TlSemigroup)> {
    let tl = TlSemigroup::build(l, budget)?;
    let dual = NormalCategory::build_r(&tl.table)?;
    Ok((dual, tl))
}

/// `N*R(S)` as `R(TR(S))`; same construction applied to `R(S)`.
pub fn normal_dual_r(r: &NormalCategory, budget: u64) -> Result<(NormalCategory, TlSemigroup)> {
    normal_dual_l(r, budget)
}
