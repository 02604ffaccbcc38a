//! Green's relations from explicit principal ideals.

use fixedbitset::FixedBitSet;

use crate::semigroup::FiniteSemigroup;

/// Class ids are assigned in order of least member, so class 0 always holds
/// element 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenStructure {
    pub lclass: Vec<usize>,
    pub rclass: Vec<usize>,
    pub hclass: Vec<usize>,
    pub dclass: Vec<usize>,
    /// `lorder[i][j]` iff the left ideal of L-class `i` is inside that of `j`.
    pub lorder: Vec<Vec<bool>>,
    /// `Sa` per element.
    pub left: Vec<FixedBitSet>,
    /// `aS` per element.
    pub right: Vec<FixedBitSet>,
}

impl GreenStructure {
    pub fn new(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for a in s.elements() {
            let mut l = FixedBitSet::with_capacity(n);
            let mut r = FixedBitSet::with_capacity(n);
            for x in s.elements() {
                l.insert(s.mul(x, a));
                r.insert(s.mul(a, x));
            }
            left.push(l);
            right.push(r);
        }
        let left_one: Vec<FixedBitSet> = left
            .iter()
            .enumerate()
            .map(|(a, set)| with(set, a))
            .collect();
        let right_one: Vec<FixedBitSet> = right
            .iter()
            .enumerate()
            .map(|(a, set)| with(set, a))
            .collect();

        let lclass = partition_by(&left_one);
        let rclass = partition_by(&right_one);
        let hclass = partition_by(&(0..n).map(|a| (lclass[a], rclass[a])).collect::<Vec<_>>());
        let dclass = join(&lclass, &rclass);

        let classes = lclass.iter().max().map_or(0, |m| m + 1);
        let mut reps = vec![usize::MAX; classes];
        for a in (0..n).rev() {
            reps[lclass[a]] = a;
        }
        let lorder = reps
            .iter()
            .map(|&i| {
                reps.iter()
                    .map(|&j| left_one[i].is_subset(&left_one[j]))
                    .collect()
            })
            .collect();

        GreenStructure {
            lclass,
            rclass,
            hclass,
            dclass,
            lorder,
            left,
            right,
        }
    }

    /// `S¹a`.
    pub fn left_ideal_one(&self, a: usize) -> FixedBitSet {
        with(&self.left[a], a)
    }

    pub fn right_ideal_one(&self, a: usize) -> FixedBitSet {
        with(&self.right[a], a)
    }

    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.lclass[a] == self.lclass[b]
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.rclass[a] == self.rclass[b]
    }

    pub fn d_related(&self, a: usize, b: usize) -> bool {
        self.dclass[a] == self.dclass[b]
    }

    pub fn class_count(partition: &[usize]) -> usize {
        partition.iter().max().map_or(0, |m| m + 1)
    }

    /// Members of every class, classes in id order.
    pub fn classes(partition: &[usize]) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); Self::class_count(partition)];
        for (a, &c) in partition.iter().enumerate() {
            out[c].push(a);
        }
        out
    }

    /// Every D-class holds exactly one idempotent.
    pub fn unique_idempotent_per_d_class(&self, s: &FiniteSemigroup) -> bool {
        let mut counts = vec![0usize; Self::class_count(&self.dclass)];
        for e in s.idempotents() {
            counts[self.dclass[e]] += 1;
        }
        counts.iter().all(|&c| c == 1)
    }
}

fn with(set: &FixedBitSet, a: usize) -> FixedBitSet {
    let mut s = set.clone();
    s.insert(a);
    s
}

fn partition_by<K: PartialEq>(keys: &[K]) -> Vec<usize> {
    let mut ids = vec![usize::MAX; keys.len()];
    let mut next = 0;
    for a in 0..keys.len() {
        if ids[a] != usize::MAX {
            continue;
        }
        for b in a..keys.len() {
            if ids[b] == usize::MAX && keys[b] == keys[a] {
                ids[b] = next;
            }
        }
        next += 1;
    }
    ids
}

/// Join of two equivalences, renumbered by least member.
fn join(p: &[usize], q: &[usize]) -> Vec<usize> {
    let n = p.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for part in [p, q] {
        let mut first = vec![usize::MAX; n];
        for (a, &c) in part.iter().enumerate() {
            if first[c] == usize::MAX {
                first[c] = a;
            } else {
                let (x, y) = (find(&mut parent, a), find(&mut parent, first[c]));
                parent[x.max(y)] = x.min(y);
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|a| find(&mut parent, a)).collect();
    partition_by(&roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{brandt_b2, chain, cyclic_group};

    #[test]
    fn chain_is_discrete() {
        let g = GreenStructure::new(&chain(2));
        assert_eq!(g.lclass, vec![0, 1]);
        assert_eq!(g.rclass, g.lclass);
        assert_eq!(g.hclass, g.lclass);
        assert_eq!(g.dclass, g.lclass);
        assert!(g.lorder[1][0] && !g.lorder[0][1]);
    }

    #[test]
    fn group_is_one_class() {
        let g = GreenStructure::new(&cyclic_group(2));
        for p in [&g.lclass, &g.rclass, &g.hclass, &g.dclass] {
            assert_eq!(p, &vec![0, 0]);
        }
    }

    #[test]
    fn brandt_classes() {
        let b2 = brandt_b2();
        let g = GreenStructure::new(&b2);
        assert_eq!(
            GreenStructure::classes(&g.lclass),
            vec![vec![0], vec![1, 3], vec![2, 4]]
        );
        assert_eq!(
            GreenStructure::classes(&g.rclass),
            vec![vec![0], vec![1, 2], vec![3, 4]]
        );
        assert_eq!(
            GreenStructure::classes(&g.dclass),
            vec![vec![0], vec![1, 2, 3, 4]]
        );
        assert_eq!(GreenStructure::class_count(&g.hclass), 5);
        assert_eq!(g.left[1].ones().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert!(!g.unique_idempotent_per_d_class(&b2));
    }
}
