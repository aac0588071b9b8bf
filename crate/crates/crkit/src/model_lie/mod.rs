//! Graded symmetry analysis of polynomial model hypersurfaces: component
//! bases of the symmetry algebra, rotation classification, holomorphic
//! nondegeneracy, Levi-form scans, sum-of-squares structure and chains.

mod chain;
mod grading;
mod levi;
mod nondegen;
mod rotation;
mod sos;

pub use chain::{annihilator_dimension, has_positive_weight, verify_chain, ChainReport, ChainSpec};
pub use grading::{component_residuals, graded_component, rigid_rotations, GradedComponentBasis};
pub use levi::{levi_determinant_identity_check, levi_form, pseudoconvexity_scan, ScanVerdict};
pub use nondegen::holomorphically_nondegenerate;
pub use rotation::{classify_rotation, RotationClassification};
pub use sos::{sos_decompose, sos_gram, NumPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelLieError {
    #[error("weight {0} is not one of -1, -1/m, 0, tau/m (1 <= tau <= m-2), 1-1/m, 1")]
    BadWeight(String),
    #[error("field coefficients are not homogeneous linear")]
    NotLinear,
    #[error("operation requires n = {expected} variables, model has {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("chain sequences have mismatched lengths: |U| = {u}, |V| = {v}, |c| = {c}, |d| = {d}")]
    LengthMismatch { u: usize, v: usize, c: usize, d: usize },
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("field is not weighted homogeneous of positive weight")]
    WeightNotPositive,
    #[error("invalid degree: {0}")]
    InvalidDegree(String),
    #[error("polynomial is not homogeneous of even degree")]
    NotBihomogeneous,
    #[error(transparent)]
    Numerics(#[from] crate::numerics::NumericsError),
}
