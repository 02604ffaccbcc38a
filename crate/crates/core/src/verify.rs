//! Exhaustive checks of the structural results about normal categories and
//! cone semigroups. Every check runs on any regular input and reports what it
//! found; whether a failure is a bug depends on the input's class and is
//! decided by the caller.

use serde::Serialize;

use crate::category::{Morphism, NormalCategory};
use crate::cones::NormalCone;
use crate::cones::DEFAULT_ENUMERATION_BUDGET;
use crate::duals::{functor_search, induced_category_iso, CategoryIso};
use crate::error::{Error, Result};
use crate::iso::{find_isomorphism, invert, is_bijection, DEFAULT_SEARCH_BUDGET};
use crate::semigroup::FiniteSemigroup;
use crate::tl::TlSemigroup;

/// Categories up to this many objects may fall back to [`functor_search`].
pub const FUNCTOR_SEARCH_MAX_OBJECTS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Assignments per apex during cone enumeration.
    pub enumeration: u64,
    /// Nodes per isomorphism or functor search.
    pub search: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            enumeration: DEFAULT_ENUMERATION_BUDGET,
            search: DEFAULT_SEARCH_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Prop2Report {
    pub pass: bool,
    pub pairs_checked: usize,
    /// Distinct objects joined by an isomorphism.
    pub witness: Option<(usize, usize, Morphism)>,
}

pub fn verify_prop2(c: &NormalCategory) -> Prop2Report {
    let objects = c.objects();
    let mut witness = None;
    let mut pairs_checked = 0;
    for &e in objects {
        for &f in objects {
            pairs_checked += 1;
            let iso = c.iso_between(e, f);
            if (iso.is_some() != (e == f)) && witness.is_none() {
                // identical objects always have the identity, so only e != f can fail
                witness = iso.map(|m| (e, f, m));
            }
        }
    }
    Prop2Report {
        pass: witness.is_none(),
        pairs_checked,
        witness,
    }
}

pub type Triple = (usize, usize, usize);

#[derive(Debug, Clone, Serialize)]
pub struct Prop3Report {
    pub pass: bool,
    pub raw_triples: usize,
    pub distinct_morphisms: usize,
    /// Two different raw triples naming the same morphism.
    pub witness: Option<(Triple, Triple)>,
}

/// Raw triples `(e, u, f)` with `e`, `f` idempotent and `u ∈ eSf` name
/// distinct morphisms.
pub fn verify_prop3(c: &NormalCategory) -> Prop3Report {
    let s = c.base();
    let idempotents = s.idempotents();
    let mut seen: std::collections::HashMap<Morphism, (usize, usize, usize)> = Default::default();
    let mut raw_triples = 0;
    let mut witness = None;
    for &e in &idempotents {
        for &f in &idempotents {
            for u in s.elements() {
                let Ok(m) = c.canonicalize(e, u, f) else {
                    continue;
                };
                raw_triples += 1;
                if let Some(&earlier) = seen.get(&m) {
                    witness.get_or_insert((earlier, (e, u, f)));
                } else {
                    seen.insert(m, (e, u, f));
                }
            }
        }
    }
    Prop3Report {
        pass: witness.is_none(),
        raw_triples,
        distinct_morphisms: seen.len(),
        witness,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Prop4Report {
    pub pass: bool,
    pub cones: usize,
    pub non_principal: Vec<NormalCone>,
}

pub fn verify_prop4(tl: &TlSemigroup) -> Prop4Report {
    let non_principal: Vec<NormalCone> = (0..tl.order())
        .filter(|&i| !tl.is_principal(i))
        .map(|i| tl.cones[i].clone())
        .collect();
    Prop4Report {
        pass: non_principal.is_empty(),
        cones: tl.order(),
        non_principal,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Prop5Report {
    pub pass: bool,
    /// `a != b` with equal principal cones.
    pub witness: Option<(usize, usize)>,
}

pub fn verify_prop5(tl: &TlSemigroup) -> Prop5Report {
    let idx = &tl.principal_index;
    let witness = (0..idx.len())
        .flat_map(|a| (a + 1..idx.len()).map(move |b| (a, b)))
        .find(|&(a, b)| idx[a] == idx[b]);
    Prop5Report {
        pass: witness.is_none(),
        witness,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem6Report {
    pub order: usize,
    pub cones: usize,
    pub homomorphism: bool,
    pub injective: bool,
    pub surjective: bool,
    pub isomorphism: bool,
    pub homomorphism_witness: Option<(usize, usize)>,
    pub collision: Option<(usize, usize)>,
    pub missed_cone: Option<usize>,
}

pub fn theorem6(s: &FiniteSemigroup, tl: &TlSemigroup) -> Theorem6Report {
    let idx = &tl.principal_index;
    let homomorphism_witness = s
        .elements()
        .flat_map(|a| s.elements().map(move |b| (a, b)))
        .find(|&(a, b)| idx[s.mul(a, b)] != tl.table.mul(idx[a], idx[b]));
    let collision = verify_prop5(tl).witness;
    let missed_cone = (0..tl.order()).find(|&i| !tl.is_principal(i));
    let (homomorphism, injective, surjective) = (
        homomorphism_witness.is_none(),
        collision.is_none(),
        missed_cone.is_none(),
    );
    Theorem6Report {
        order: s.order(),
        cones: tl.order(),
        homomorphism,
        injective,
        surjective,
        isomorphism: homomorphism && injective && surjective,
        homomorphism_witness,
        collision,
        missed_cone,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoMethod {
    Transport,
    Search,
    None,
}

/// Outcome of comparing two normal categories.
#[derive(Debug, Clone, Serialize)]
pub struct CategoryComparison {
    pub verified: bool,
    pub method: IsoMethod,
    pub source_objects: usize,
    pub source_morphisms: usize,
    pub target_objects: usize,
    pub target_morphisms: usize,
    pub object_map: Option<Vec<(usize, usize)>>,
    pub note: Option<String>,
    #[serde(skip)]
    pub iso: Option<CategoryIso>,
}

/// Transports along `rho_inverse` when it is a bijection; otherwise falls back
/// to a direct search on small categories.
fn compare_categories(
    source: &NormalCategory,
    target: &NormalCategory,
    rho_inverse: Option<Vec<usize>>,
    budgets: Budgets,
) -> Result<CategoryComparison> {
    let mut out = CategoryComparison {
        verified: false,
        method: IsoMethod::None,
        source_objects: source.object_count(),
        source_morphisms: source.morphism_count(),
        target_objects: target.object_count(),
        target_morphisms: target.morphism_count(),
        object_map: None,
        note: None,
        iso: None,
    };
    let found = match rho_inverse {
        Some(phi) => {
            out.method = IsoMethod::Transport;
            match induced_category_iso(&phi, source, target) {
                Ok(iso) => Some(iso),
                Err(e @ (Error::NotAnIsomorphism(_) | Error::FunctorialityFailed(_))) => {
                    out.note = Some(e.to_string());
                    None
                }
                Err(e) => return Err(e),
            }
        }
        None if source.object_count() <= FUNCTOR_SEARCH_MAX_OBJECTS
            && target.object_count() <= FUNCTOR_SEARCH_MAX_OBJECTS =>
        {
            out.method = IsoMethod::Search;
            out.note = Some("principal cone map is not a bijection".into());
            functor_search(source, target, budgets.search)?.filter(|iso| iso.verified)
        }
        None => {
            out.note = Some("principal cone map is not a bijection".into());
            None
        }
    };
    if let Some(iso) = found {
        out.verified = iso.verified;
        out.object_map = Some(iso.object_map.clone());
        out.iso = Some(iso);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem8Report {
    pub pass: bool,
    pub tr_order: usize,
    /// Isomorphism `TR(S) -> opposite(S)`, i.e. an anti-isomorphism onto `S`.
    pub anti_isomorphism: Option<Vec<usize>>,
    pub dual: CategoryComparison,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegenerationReport {
    pub pass: bool,
    /// `R(S) ≅ N*L(S)`.
    pub gamma: bool,
    /// `L(S) ≅ N*R(S)`.
    pub delta: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TlWellFormedReport {
    pub pass: bool,
    pub order: usize,
    pub associative: bool,
    pub regular: bool,
    pub irregular_cone: Option<usize>,
}

pub fn tl_well_formed(tl: &TlSemigroup) -> TlWellFormedReport {
    // the table only exists if it passed associativity validation
    let irregular_cone = tl.regularity_witnesses().iter().position(Option::is_none);
    TlWellFormedReport {
        pass: irregular_cone.is_none(),
        order: tl.order(),
        associative: true,
        regular: irregular_cone.is_none(),
        irregular_cone,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SemilatticeReport {
    pub pass: bool,
    pub theorem6: bool,
    pub theorem7: bool,
    pub theorem8: bool,
    pub tl_commutative: bool,
    pub tl_idempotent: bool,
    pub orders_match: bool,
}

/// Everything derived from one regular semigroup: both categories, both cone
/// semigroups and both normal duals.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub s: FiniteSemigroup,
    pub budgets: Budgets,
    pub l: NormalCategory,
    pub r: NormalCategory,
    pub tl: TlSemigroup,
    pub tr: TlSemigroup,
    /// `R(TL(S))`.
    pub dual_l: NormalCategory,
    /// `R(TR(S))`.
    pub dual_r: NormalCategory,
}

impl Pipeline {
    pub fn new(s: &FiniteSemigroup, budgets: Budgets) -> Result<Self> {
        let l = NormalCategory::build_l(s)?;
        let r = NormalCategory::build_r(s)?;
        let tl = TlSemigroup::build(&l, budgets.enumeration)?;
        let tr = TlSemigroup::build(&r, budgets.enumeration)?;
        let dual_l = NormalCategory::build_r(&tl.table)?;
        let dual_r = NormalCategory::build_r(&tr.table)?;
        Ok(Pipeline {
            s: s.clone(),
            budgets,
            l,
            r,
            tl,
            tr,
            dual_l,
            dual_r,
        })
    }

    pub fn prop2(&self) -> Prop2Report {
        verify_prop2(&self.l)
    }

    pub fn prop3(&self) -> Prop3Report {
        verify_prop3(&self.l)
    }

    pub fn prop4(&self) -> Prop4Report {
        verify_prop4(&self.tl)
    }

    pub fn prop5(&self) -> Prop5Report {
        verify_prop5(&self.tl)
    }

    pub fn theorem6(&self) -> Theorem6Report {
        theorem6(&self.s, &self.tl)
    }

    /// `N*L(S) = R(TL(S))` against `R(S)`, transported along `ρ̄⁻¹`.
    pub fn theorem7(&self) -> Result<CategoryComparison> {
        let rho_inverse = is_bijection(&self.tl.principal_index, self.tl.order())
            .then(|| invert(&self.tl.principal_index));
        compare_categories(&self.dual_l, &self.r, rho_inverse, self.budgets)
    }

    /// `TR(S)` anti-isomorphic to `S`, and `N*R(S) = R(TR(S))` against `L(S)`.
    ///
    /// `ρ̄⁻¹: TR(S) -> opposite(S)` is also an isomorphism between the
    /// opposites, which are exactly the bases of `R(TR(S))` and `L(S)`.
    pub fn theorem8(&self) -> Result<Theorem8Report> {
        let anti_isomorphism =
            find_isomorphism(&self.tr.table, &self.s.opposite(), self.budgets.search)?;
        let rho_inverse = is_bijection(&self.tr.principal_index, self.tr.order())
            .then(|| invert(&self.tr.principal_index));
        let dual = compare_categories(&self.dual_r, &self.l, rho_inverse, self.budgets)?;
        Ok(Theorem8Report {
            pass: anti_isomorphism.is_some() && dual.verified,
            tr_order: self.tr.order(),
            anti_isomorphism,
            dual,
        })
    }

    pub fn degeneration(&self) -> Result<DegenerationReport> {
        let gamma = self.theorem7()?.verified;
        let delta = self.theorem8()?.dual.verified;
        Ok(DegenerationReport {
            pass: gamma && delta,
            gamma,
            delta,
        })
    }

    pub fn tl_well_formed(&self) -> TlWellFormedReport {
        tl_well_formed(&self.tl)
    }

    pub fn semilattice(&self) -> Result<SemilatticeReport> {
        if !self.s.is_semilattice() {
            return Err(Error::NotASemilattice(
                "input is not a commutative band".into(),
            ));
        }
        let theorem6 = self.theorem6().isomorphism;
        let theorem7 = self.theorem7()?.verified;
        let theorem8 = self.theorem8()?.pass;
        let tl_commutative = self.tl.table.is_commutative();
        let tl_idempotent = self.tl.table.is_band();
        let orders_match = self.tl.order() == self.s.order();
        Ok(SemilatticeReport {
            pass: theorem6
                && theorem7
                && theorem8
                && tl_commutative
                && tl_idempotent
                && orders_match,
            theorem6,
            theorem7,
            theorem8,
            tl_commutative,
            tl_idempotent,
            orders_match,
        })
    }
}

pub fn verify_theorem6(s: &FiniteSemigroup, budgets: Budgets) -> Result<Theorem6Report> {
    let l = NormalCategory::build_l(s)?;
    let tl = TlSemigroup::build(&l, budgets.enumeration)?;
    Ok(theorem6(s, &tl))
}

pub fn verify_theorem7(s: &FiniteSemigroup, budgets: Budgets) -> Result<CategoryComparison> {
    Pipeline::new(s, budgets)?.theorem7()
}

pub fn verify_theorem8(s: &FiniteSemigroup, budgets: Budgets) -> Result<Theorem8Report> {
    Pipeline::new(s, budgets)?.theorem8()
}

pub fn verify_degeneration(s: &FiniteSemigroup, budgets: Budgets) -> Result<DegenerationReport> {
    Pipeline::new(s, budgets)?.degeneration()
}

pub fn verify_semilattice_theorems(
    s: &FiniteSemigroup,
    budgets: Budgets,
) -> Result<SemilatticeReport> {
    if !s.is_semilattice() {
        return Err(Error::NotASemilattice(
            "input is not a commutative band".into(),
        ));
    }
    Pipeline::new(s, budgets)?.semilattice()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{brandt_b2, chain, cl5, cyclic_group};

    #[test]
    fn chain_passes_everything() {
        let p = Pipeline::new(&chain(2), Budgets::default()).unwrap();
        assert!(p.prop2().pass && p.prop3().pass && p.prop4().pass && p.prop5().pass);
        assert!(p.theorem6().isomorphism);
        assert!(p.theorem7().unwrap().verified);
        assert!(p.theorem8().unwrap().pass);
        assert!(p.degeneration().unwrap().pass);
        assert!(p.semilattice().unwrap().pass);
    }

    #[test]
    fn cl5_passes() {
        let r = verify_theorem6(&cl5(), Budgets::default()).unwrap();
        assert!(r.isomorphism);
        assert_eq!(r.cones, 5);
        let t7 = verify_theorem7(&cl5(), Budgets::default()).unwrap();
        assert!(t7.verified);
        assert_eq!(t7.source_objects, 2);
    }

    #[test]
    fn brandt_fails_the_clifford_claims() {
        let p = Pipeline::new(&brandt_b2(), Budgets::default()).unwrap();
        let prop2 = p.prop2();
        assert!(!prop2.pass);
        assert_eq!(prop2.witness, Some((1, 4, Morphism::new(1, 2, 4))));
        let prop4 = p.prop4();
        assert!(!prop4.pass);
        assert!(prop4.non_principal.contains(&NormalCone {
            apex: 1,
            components: vec![0, 1, 3]
        }));
        let t6 = p.theorem6();
        assert!(t6.homomorphism && t6.injective && !t6.surjective && !t6.isomorphism);
        assert!(p.tl_well_formed().pass);
    }

    #[test]
    fn semilattice_check_rejects_groups() {
        assert!(matches!(
            verify_semilattice_theorems(&cyclic_group(2), Budgets::default()),
            Err(Error::NotASemilattice(_))
        ));
    }
}
