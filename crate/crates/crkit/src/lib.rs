//! crkit: analysis toolkit for CR model hypersurfaces.
//!
//! Two families of models are supported. Quadric models (tuples of Hermitian
//! matrices) are analysed through the matrix equation PX^2 + AX + tconj(P) = 0
//! and its associated series: nondegeneracy matrices, the 1-jet Jacobian
//! criterion, orbit spans and minimality, and seeded pseudoconvexity
//! searches. Polynomial model hypersurfaces Im w = Q(z, conj z) are analysed
//! with exact rational arithmetic: graded symmetry components, rotation
//! classification, holomorphic nondegeneracy, sum-of-squares structure,
//! chain decompositions and Levi-form witnesses.

pub mod fixtures;
pub mod numerics;
pub mod polyalg;
pub mod quadric;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
