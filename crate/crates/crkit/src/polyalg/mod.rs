//! Exact multivariate polynomial algebra in (z, conj z) over Gaussian
//! rationals, vector fields, model hypersurfaces, and the exact linear
//! algebra behind the symmetry computations.

pub mod exact;
pub mod field;
pub mod gaussian;
pub mod herm;
pub mod holo;
pub mod json;
pub mod model;

pub use field::GradedVectorField;
pub use gaussian::{GaussianRational, Rat};
pub use herm::{HermPoly, Var};
pub use holo::HoloPoly;
pub use model::{ModelError, ModelHypersurface};
