//! Isomorphism search between finite semigroups.
//!
//! Backtracking over element images in ascending index order. Candidates are
//! restricted to elements with the same invariant signature, and every
//! assignment propagates forced images through products of already-mapped
//! elements. The first complete map found is returned, so results are
//! deterministic.

use crate::error::{Error, Result};
use crate::green::GreenStructure;
use crate::semigroup::FiniteSemigroup;

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Isomorphism-invariant data attached to one element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    idempotent: bool,
    index: usize,
    period: usize,
    l_size: usize,
    r_size: usize,
    h_size: usize,
    d_size: usize,
    left_ideal: usize,
    right_ideal: usize,
    fixes_left: usize,
}

fn signatures(s: &FiniteSemigroup) -> Vec<Signature> {
    let g = GreenStructure::new(s);
    let sizes = |p: &[usize]| {
        let mut count = vec![0; GreenStructure::class_count(p)];
        for &c in p {
            count[c] += 1;
        }
        p.iter().map(|&c| count[c]).collect::<Vec<_>>()
    };
    let (l, r, h, d) = (
        sizes(&g.lclass),
        sizes(&g.rclass),
        sizes(&g.hclass),
        sizes(&g.dclass),
    );
    s.elements()
        .map(|a| {
            let (index, period) = index_period(s, a);
            Signature {
                idempotent: s.is_idempotent(a),
                index,
                period,
                l_size: l[a],
                r_size: r[a],
                h_size: h[a],
                d_size: d[a],
                left_ideal: g.left[a].count_ones(..),
                right_ideal: g.right[a].count_ones(..),
                fixes_left: s.elements().filter(|&x| s.mul(x, a) == a).count(),
            }
        })
        .collect()
}

/// Index and period of the monogenic subsemigroup generated by `a`.
pub fn index_period(s: &FiniteSemigroup, a: usize) -> (usize, usize) {
    let mut seen = vec![0usize; s.order()];
    let mut power = a;
    let mut k = 1;
    loop {
        if seen[power] != 0 {
            return (seen[power], k - seen[power]);
        }
        seen[power] = k;
        power = s.mul(power, a);
        k += 1;
    }
}

struct Search<'a> {
    s: &'a FiniteSemigroup,
    t: &'a FiniteSemigroup,
    sig_s: Vec<Signature>,
    sig_t: Vec<Signature>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn set(&mut self, a: usize, x: usize) -> bool {
        if let Some(y) = self.map[a] {
            return y == x;
        }
        if self.used[x] || self.sig_s[a] != self.sig_t[x] {
            return false;
        }
        self.map[a] = Some(x);
        self.used[x] = true;
        self.trail.push(a);
        true
    }

    /// Assign and close under products of mapped elements.
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
                    let image = self.t.mul(self.map[p].unwrap(), self.map[q].unwrap());
                    if !self.set(self.s.mul(p, q), image) {
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
        for x in 0..self.t.order() {
            if self.used[x] || self.sig_s[a] != self.sig_t[x] {
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

/// Finds an isomorphism `S -> T` as an index map, or `None` if none exists.
pub fn find_isomorphism(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if s.order() != t.order() {
        return Ok(None);
    }
    let sig_s = signatures(s);
    let sig_t = signatures(t);
    let mut sorted_s = sig_s.clone();
    let mut sorted_t = sig_t.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return Ok(None);
    }
    let n = s.order();
    let mut search = Search {
        s,
        t,
        sig_s,
        sig_t,
        map: vec![None; n],
        used: vec![false; n],
        trail: Vec::with_capacity(n),
        nodes: 0,
        budget,
    };
    if search.run()? {
        Ok(Some(search.map.into_iter().map(Option::unwrap).collect()))
    } else {
        Ok(None)
    }
}

/// Finds `φ` with `φ(ab) = φ(b)φ(a)`.
pub fn find_anti_isomorphism(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    find_isomorphism(s, &t.opposite(), budget)
}

/// Checks the (anti-)homomorphism law for `map: S -> T`. Bijectivity is not
/// part of this check; see [`verify_isomorphism`].
pub fn verify_morphism(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    map: &[usize],
    anti: bool,
) -> bool {
    if map.len() != s.order() || map.iter().any(|&x| x >= t.order()) {
        return false;
    }
    s.elements().all(|a| {
        s.elements().all(|b| {
            let lhs = map[s.mul(a, b)];
            let rhs = if anti {
                t.mul(map[b], map[a])
            } else {
                t.mul(map[a], map[b])
            };
            lhs == rhs
        })
    })
}

pub fn is_bijection(map: &[usize], codomain: usize) -> bool {
    if map.len() != codomain {
        return false;
    }
    let mut hit = vec![false; codomain];
    map.iter()
        .all(|&x| x < codomain && !std::mem::replace(&mut hit[x], true))
}

pub fn verify_isomorphism(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    map: &[usize],
    anti: bool,
) -> bool {
    is_bijection(map, t.order()) && verify_morphism(s, t, map, anti)
}

pub fn invert(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; map.len()];
    for (a, &x) in map.iter().enumerate() {
        inv[x] = a;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{brandt_b2, chain, cyclic_group, symmetric_group3};

    #[test]
    fn identity_on_chain() {
        let c2 = chain(2);
        assert_eq!(find_isomorphism(&c2, &c2, 100).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn invariant_mismatch() {
        assert_eq!(
            find_isomorphism(&cyclic_group(2), &chain(2), 100).unwrap(),
            None
        );
    }

    #[test]
    fn brandt_is_self_dual() {
        let b2 = brandt_b2();
        let phi = find_anti_isomorphism(&b2, &b2, 1000).unwrap().unwrap();
        assert!(verify_isomorphism(&b2, &b2, &phi, true));
        assert!(verify_isomorphism(&b2, &b2.opposite(), &phi, false));
    }

    #[test]
    fn index_and_period() {
        assert_eq!(index_period(&cyclic_group(3), 1), (1, 3));
        assert_eq!(index_period(&chain(3), 2), (1, 1));
    }

    #[test]
    fn budget_is_enforced() {
        let s3 = symmetric_group3();
        assert_eq!(
            find_isomorphism(&s3, &s3, 1),
            Err(Error::SearchBudgetExceeded(1))
        );
    }

    #[test]
    fn rejects_non_bijection() {
        let c2 = chain(2);
        assert!(verify_morphism(&c2, &c2, &[1, 1], false));
        assert!(!verify_isomorphism(&c2, &c2, &[1, 1], false));
    }
}
