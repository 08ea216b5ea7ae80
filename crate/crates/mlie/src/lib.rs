//! Exact computer algebra for group-graded algebras braided by a
//! bicharacter.
//!
//! The crate builds finite-dimensional algebras graded over a finitely
//! generated abelian group, equips them with the braided bracket
//! `[a, b] = ab - r(|b|, |a|) ba` induced by a bicharacter `r`, and decides
//! structural identities exactly: grading and associativity of the
//! multiplication table, braided antisymmetry, the braided Jacobi identity,
//! and strictness. On top of that sit generalized matrix algebras and quiver
//! path algebras, quantum-trace kernels (`sl`-type) and orthosymplectic
//! solution spaces (`osp`-type) with their bracket-closure obstructions,
//! superization to `Z_2` gradings, and representation checking.
//!
//! All coefficient arithmetic is exact: `Q`, cyclotomic fields
//! `Q(zeta_N)`, or rational functions `Q(t)`. There is no floating point,
//! so every verdict is a theorem about the input, and every failed check
//! carries the first offending basis tuple together with its nonzero defect.

pub mod algebra;
pub mod classical;
pub mod doc;
mod error;
pub mod field;
pub mod gm;
pub mod grading;
pub mod instances;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod report;
pub mod sampler;

pub use algebra::{GradedAlgebra, GradedElement};
pub use error::Error;
pub use field::{FieldElement, FieldSpec};
pub use gm::{GmAlgebra, GmElement};
pub use grading::{Bicharacter, GroupElement, GroupSpec};
pub use quiver::Quiver;
pub use report::{CheckReport, Defect, Witness};
