//! Finite semigroups, the normal categories of their principal ideals, and
//! the semigroup of normal cones.
//!
//! The pipeline for a regular semigroup `S` given by its Cayley table:
//!
//! 1. [`NormalCategory::build_l`] materializes `L(S)`: objects `Se`, morphisms
//!    `ρ(e,u,f)` as canonical triples, inclusions.
//! 2. [`cones::enumerate_cones`] lists every normal cone of `L(S)`.
//! 3. [`TlSemigroup::build`] multiplies cones and checks the result is a
//!    regular semigroup containing the principal cones `ρ^a` as a
//!    homomorphic image of `S`.
//! 4. [`verify::Pipeline`] compares `TL(S)` with `S`, and the normal duals
//!    `R(TL(S))`, `R(TR(S))` with `R(S)`, `L(S)`.
//!
//! For Clifford semigroups all comparisons are isomorphisms; the Brandt
//! semigroup B2 is the stock counterexample.

pub mod builders;
pub mod category;
pub mod cones;
pub mod duals;
pub mod error;
pub mod fixtures;
pub mod green;
pub mod iso;
pub mod report;
pub mod semigroup;
pub mod tl;
pub mod verify;

pub use builders::{SlgSpec, StructureMap};
pub use category::{Morphism, NormalCategory, Side};
pub use cones::NormalCone;
pub use duals::CategoryIso;
pub use error::{Error, Result};
pub use green::GreenStructure;
pub use semigroup::FiniteSemigroup;
pub use tl::TlSemigroup;
