//! Exact-arithmetic analysis of torsion-free holonomy candidates.
//!
//! Given a Lie subalgebra `h ⊂ gl(m)` presented by a basis of rational
//! matrices, this crate computes the algebraic invariants controlling
//! whether `H` can appear as the holonomy of a torsion-free affine
//! connection: the torsion differential and its cokernel, the curvature
//! space `K(h)` and its prolongations `K¹`, `K²`, Berger's two criteria,
//! Cartan characters and involutivity of the curvature tableau, torsion
//! absorbability, and the resulting degrees of local generality.  A
//! catalog of classical, exceptional and exotic candidates ships with the
//! crate together with their documented expected invariants.
//!
//! All arithmetic is exact (arbitrary-precision rationals); random flags
//! used for Cartan characters are seeded and reproducible.

pub mod berger;
pub mod catalog;
pub mod error;
pub mod linalg;
pub mod rep;
pub mod spencer;
pub mod tensor;

pub use error::{Error, Result};
pub use linalg::{LinearMap, Matrix, Scalar, Subspace};
pub use rep::Representation;
