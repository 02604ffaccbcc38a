//! The semigroup of all normal cones of `L(S)` under the cone product.

use std::collections::HashMap;

use crate::category::NormalCategory;
use crate::cones::{cone_product, enumerate_cones, principal_cone, NormalCone};
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone)]
pub struct TlSemigroup {
    pub cones: Vec<NormalCone>,
    pub table: FiniteSemigroup,
    /// `principal_index[a]` is the index of `ρ^a` in `cones`.
    pub principal_index: Vec<usize>,
    pub visited: Vec<u64>,
}

impl TlSemigroup {
    pub fn build(c: &NormalCategory, budget: u64) -> Result<Self> {
        let enumeration = enumerate_cones(c, budget)?;
        let cones = enumeration.cones;
        let index: HashMap<&NormalCone, usize> =
            cones.iter().enumerate().map(|(i, g)| (g, i)).collect();

        let mut rows = Vec::with_capacity(cones.len());
        for gamma in &cones {
            let row = cones
                .iter()
                .map(|delta| {
                    let product = cone_product(c, gamma, delta);
                    index.get(&product).copied().ok_or_else(|| {
                        Error::Internal(format!("cone product left the cone set: {product:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let table = FiniteSemigroup::from_table(rows, None)?;

        let principal_index = c
            .base()
            .elements()
            .map(|a| {
                let rho = principal_cone(c, a);
                index.get(&rho).copied().ok_or_else(|| {
                    Error::Internal(format!("principal cone of {a} was not enumerated"))
                })
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(TlSemigroup {
            cones,
            table,
            principal_index,
            visited: enumeration.visited,
        })
    }

    pub fn order(&self) -> usize {
        self.cones.len()
    }

    pub fn is_principal(&self, cone: usize) -> bool {
        self.principal_index.contains(&cone)
    }

    /// Least element `a` with `ρ^a` equal to the given cone.
    pub fn principal_witness(&self, cone: usize) -> Option<usize> {
        self.principal_index.iter().position(|&i| i == cone)
    }

    /// For each cone `γ`, some `δ` with `γδγ = γ`.
    pub fn regularity_witnesses(&self) -> Vec<Option<usize>> {
        self.table
            .elements()
            .map(|g| self.table.inner_inverse(g))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{brandt_b2, chain, cyclic_group};

    #[test]
    fn chain_and_group() {
        let c2 = NormalCategory::build_l(&chain(2)).unwrap();
        let tl = TlSemigroup::build(&c2, 100).unwrap();
        assert_eq!(tl.order(), 2);
        assert_eq!(tl.principal_index, vec![0, 1]);
        assert_eq!(tl.table, chain(2));

        let z2 = NormalCategory::build_l(&cyclic_group(2)).unwrap();
        let tl = TlSemigroup::build(&z2, 100).unwrap();
        assert_eq!(tl.table, cyclic_group(2));
    }

    #[test]
    fn brandt() {
        let b2 = NormalCategory::build_l(&brandt_b2()).unwrap();
        let tl = TlSemigroup::build(&b2, 1000).unwrap();
        assert_eq!(tl.order(), 7);
        assert!(tl.table.is_regular());
        assert_eq!((0..7).filter(|&i| !tl.is_principal(i)).count(), 2);
    }
}
