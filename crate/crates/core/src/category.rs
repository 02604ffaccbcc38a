//! The normal category of principal left ideals of a regular semigroup.
//!
//! Objects are the principal left ideals `Se`, each named by the least
//! idempotent generating it. A morphism `Se -> Sf` is the right translation
//! `x ↦ xu` with `u ∈ eSf`, stored as the canonical triple `(e, u, f)`.
//! Composition is written left to right: `(e,u,f)(f,v,g) = (e,uv,g)`.
//!
//! The category of principal right ideals is the same construction over the
//! opposite semigroup, tagged [`Side::Right`].

use std::fmt::{self, Write as _};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::green::GreenStructure;
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Morphism {
    pub src: usize,
    pub u: usize,
    pub dst: usize,
}

impl Morphism {
    pub fn new(src: usize, u: usize, dst: usize) -> Self {
        Morphism { src, u, dst }
    }

    pub fn identity(e: usize) -> Self {
        Morphism::new(e, e, e)
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.src, self.u, self.dst)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.src, self.u, self.dst)
    }
}

#[derive(Debug, Clone)]
pub struct NormalCategory {
    base: FiniteSemigroup,
    side: Side,
    green: GreenStructure,
    objects: Vec<usize>,
    position: Vec<Option<usize>>,
    canon: Vec<Option<usize>>,
    homs: Vec<Vec<Vec<usize>>>,
    includes: Vec<Vec<bool>>,
}

impl NormalCategory {
    /// `L(S)`.
    pub fn build_l(s: &FiniteSemigroup) -> Result<Self> {
        Self::build(s.clone(), Side::Left)
    }

    /// `R(S)`, realized as `L` of the opposite semigroup.
    pub fn build_r(s: &FiniteSemigroup) -> Result<Self> {
        Self::build(s.opposite(), Side::Right)
    }

    fn build(base: FiniteSemigroup, side: Side) -> Result<Self> {
        if let Some(a) = base.regularity_witness() {
            return Err(Error::NotRegular(a));
        }
        let green = GreenStructure::new(&base);
        let n = base.order();

        let mut class_rep = vec![None; GreenStructure::class_count(&green.lclass)];
        for e in base.idempotents() {
            class_rep[green.lclass[e]].get_or_insert(e);
        }
        let canon: Vec<Option<usize>> = (0..n).map(|a| class_rep[green.lclass[a]]).collect();
        let mut objects: Vec<usize> = class_rep.iter().flatten().copied().collect();
        objects.sort_unstable();
        let mut position = vec![None; n];
        for (i, &e) in objects.iter().enumerate() {
            position[e] = Some(i);
        }

        let homs = objects
            .iter()
            .map(|&e| {
                objects
                    .iter()
                    .map(|&f| {
                        let mut set = FixedBitSet::with_capacity(n);
                        for x in base.elements() {
                            set.insert(base.mul(base.mul(e, x), f));
                        }
                        set.ones().collect()
                    })
                    .collect()
            })
            .collect();
        let includes = objects
            .iter()
            .map(|&e| objects.iter().map(|&f| base.mul(e, f) == e).collect())
            .collect();

        Ok(NormalCategory {
            base,
            side,
            green,
            objects,
            position,
            canon,
            homs,
            includes,
        })
    }

    /// The semigroup whose left ideals form this category: `S` for the left
    /// side, the opposite of `S` for the right side.
    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn green(&self) -> &GreenStructure {
        &self.green
    }

    /// Canonical idempotents, ascending.
    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// Position of a canonical object in [`objects`](Self::objects).
    pub fn position(&self, e: usize) -> Option<usize> {
        self.position.get(e).copied().flatten()
    }

    fn pos(&self, e: usize) -> Result<usize> {
        self.position(e).ok_or(Error::NotAnObject(e))
    }

    /// Canonical idempotent of the L-class of `a`, if that class has one.
    pub fn object_of(&self, a: usize) -> Option<usize> {
        self.canon.get(a).copied().flatten()
    }

    /// The set `eSf` for canonical objects `e`, `f`, ascending.
    pub fn hom(&self, e: usize, f: usize) -> Result<&[usize]> {
        Ok(&self.homs[self.pos(e)?][self.pos(f)?])
    }

    pub fn hom_at(&self, i: usize, j: usize) -> &[usize] {
        &self.homs[i][j]
    }

    pub fn hom_morphisms(&self, e: usize, f: usize) -> Result<impl Iterator<Item = Morphism> + '_> {
        Ok(self.hom(e, f)?.iter().map(move |&u| Morphism::new(e, u, f)))
    }

    /// Every morphism, ordered by `(src, dst, u)`.
    pub fn morphisms(&self) -> impl Iterator<Item = Morphism> + '_ {
        self.objects.iter().enumerate().flat_map(move |(i, &e)| {
            self.objects.iter().enumerate().flat_map(move |(j, &f)| {
                self.homs[i][j].iter().map(move |&u| Morphism::new(e, u, f))
            })
        })
    }

    pub fn morphism_count(&self) -> usize {
        self.homs.iter().flatten().map(Vec::len).sum()
    }

    /// `Se ⊆ Sf`.
    pub fn is_included(&self, e: usize, f: usize) -> Result<bool> {
        Ok(self.includes[self.pos(e)?][self.pos(f)?])
    }

    pub fn included_at(&self, i: usize, j: usize) -> bool {
        self.includes[i][j]
    }

    /// `S·a` as a bit-set.
    pub fn principal_left_ideal(&self, a: usize) -> &FixedBitSet {
        &self.green.left[a]
    }

    /// Size of the ideal `Se` for the object at position `i`.
    pub fn object_size(&self, i: usize) -> usize {
        self.green.left[self.objects[i]].count_ones(..)
    }

    /// Is `(src, u, dst)` a canonical, valid triple?
    pub fn contains(&self, m: Morphism) -> bool {
        match (self.position(m.src), self.position(m.dst)) {
            (Some(i), Some(j)) => self.homs[i][j].binary_search(&m.u).is_ok(),
            _ => false,
        }
    }

    /// Normal form of `ρ(e, u, f)`: `(e₀, e₀u, f₀)` with `e₀`, `f₀` the
    /// canonical idempotents L-related to `e`, `f`.
    pub fn canonicalize(&self, e: usize, u: usize, f: usize) -> Result<Morphism> {
        let s = &self.base;
        let n = s.order();
        for x in [e, u, f] {
            if x >= n {
                return Err(Error::NotInHom { e, u, f });
            }
        }
        for x in [e, f] {
            if !s.is_idempotent(x) {
                return Err(Error::NotIdempotent(x));
            }
        }
        if s.mul(e, u) != u || s.mul(u, f) != u {
            return Err(Error::NotInHom { e, u, f });
        }
        let e0 = self.canon[e].expect("idempotent has a canonical object");
        let f0 = self.canon[f].expect("idempotent has a canonical object");
        Ok(Morphism::new(e0, s.mul(e0, u), f0))
    }

    /// Diagrammatic composite: first `m1`, then `m2`.
    pub fn compose(&self, m1: Morphism, m2: Morphism) -> Result<Morphism> {
        if m1.dst != m2.src {
            return Err(Error::NotComposable {
                dst: m1.dst,
                src: m2.src,
            });
        }
        Ok(Morphism::new(m1.src, self.base.mul(m1.u, m2.u), m2.dst))
    }

    /// `ι(Sf, Sg) = (f, f, g)`.
    pub fn inclusion(&self, f: usize, g: usize) -> Result<Morphism> {
        if !self.is_included(f, g)? {
            return Err(Error::NotIncluded { f, g });
        }
        Ok(Morphism::new(f, f, g))
    }

    pub fn apply(&self, m: Morphism, x: usize) -> Result<usize> {
        if x >= self.base.order() || !self.green.left[m.src].contains(x) {
            return Err(Error::NotInDomain { x, src: m.src });
        }
        Ok(self.base.mul(x, m.u))
    }

    /// A two-sided inverse of `m`, searched over `hom(dst, src)`.
    pub fn inverse(&self, m: Morphism) -> Option<Morphism> {
        let back = self.hom(m.dst, m.src).ok()?;
        let (id_src, id_dst) = (Morphism::identity(m.src), Morphism::identity(m.dst));
        back.iter()
            .map(|&v| Morphism::new(m.dst, v, m.src))
            .find(|&w| {
                self.compose(m, w).ok() == Some(id_src) && self.compose(w, m).ok() == Some(id_dst)
            })
    }

    pub fn is_iso(&self, m: Morphism) -> bool {
        self.inverse(m).is_some()
    }

    /// First isomorphism `Se -> Sf`, if any.
    pub fn iso_between(&self, e: usize, f: usize) -> Option<Morphism> {
        self.hom_morphisms(e, f).ok()?.find(|&m| self.is_iso(m))
    }

    pub fn objects_isomorphic(&self, e: usize, f: usize) -> bool {
        self.iso_between(e, f).is_some()
    }

    /// Splits `(e,u,f)` as `(e,u,h) ; ι(Sh, Sf)` with `Sh = Su`.
    pub fn epimorphic_part(&self, m: Morphism) -> Result<(Morphism, Morphism)> {
        if !self.contains(m) {
            return Err(Error::NotInHom {
                e: m.src,
                u: m.u,
                f: m.dst,
            });
        }
        let h = self.canon[m.u].expect("regular: every L-class has an idempotent");
        Ok((Morphism::new(m.src, m.u, h), self.inclusion(h, m.dst)?))
    }

    /// Objects ordered for cone enumeration: larger ideals first, ties by
    /// index.
    pub fn top_down_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.objects.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.object_size(i)), i));
        order
    }

    pub fn to_dot(&self) -> String {
        let name = match self.side {
            Side::Left => "L",
            Side::Right => "R",
        };
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        for (i, &e) in self.objects.iter().enumerate() {
            let _ = writeln!(out, "  o{e} [label=\"{e} |{}|\"];", self.object_size(i));
        }
        for m in self.morphisms() {
            let inclusion = m.u == m.src && m.src != m.dst;
            let style = if inclusion { ", style=dashed" } else { "" };
            let _ = writeln!(
                out,
                "  o{} -> o{} [label=\"{}\"{style}];",
                m.src, m.dst, m.u
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Object {
            idempotent: usize,
            ideal: Vec<usize>,
        }
        #[derive(Serialize)]
        struct Hom<'a> {
            src: usize,
            dst: usize,
            elements: &'a [usize],
        }
        #[derive(Serialize)]
        struct Export<'a> {
            side: Side,
            order: usize,
            objects: Vec<Object>,
            homs: Vec<Hom<'a>>,
            inclusions: Vec<(usize, usize)>,
        }
        let mut homs = Vec::new();
        let mut inclusions = Vec::new();
        for (i, &e) in self.objects.iter().enumerate() {
            for (j, &f) in self.objects.iter().enumerate() {
                homs.push(Hom {
                    src: e,
                    dst: f,
                    elements: &self.homs[i][j],
                });
                if self.includes[i][j] {
                    inclusions.push((e, f));
                }
            }
        }
        let export = Export {
            side: self.side,
            order: self.base.order(),
            objects: self
                .objects
                .iter()
                .map(|&e| Object {
                    idempotent: e,
                    ideal: self.green.left[e].ones().collect(),
                })
                .collect(),
            homs,
            inclusions,
        };
        serde_json::to_value(export).expect("plain data serializes")
    }
}
