//! Weighted-homogeneous holomorphic vector field candidates.

use super::gaussian::{GaussianRational, Rat};
use super::holo::HoloPoly;
use crate::numerics::CMatrix;
use num_traits::Zero;

/// A holomorphic vector field shaped by the weighted grading templates.
///
/// The field is
///   sum_j (f[j](z) + f_w_linear[j] * w) d/dz_j  +  (g-part) d/dw
/// where the g-part is `g(z) * w` when `g_uses_w` is set and `g(z)`
/// otherwise, plus `w_part_scalar * w d/dw` at weight 0 and
/// `w_part_scalar * w^2 d/dw` at weight 1. Which pieces are populated is
/// dictated by the component the field belongs to.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedVectorField {
    pub f: Vec<HoloPoly>,
    pub f_w_linear: Vec<GaussianRational>,
    pub g: HoloPoly,
    pub g_uses_w: bool,
    pub w_part_scalar: Rat,
    pub weight: Rat,
}

impl GradedVectorField {
    pub fn zero(n: usize, weight: Rat) -> Self {
        GradedVectorField {
            f: (0..n).map(|_| HoloPoly::zero(n)).collect(),
            f_w_linear: vec![GaussianRational::zero(); n],
            g: HoloPoly::zero(n),
            g_uses_w: false,
            w_part_scalar: Rat::zero(),
            weight,
        }
    }

    /// Purely tangential field sum_j f[j] d/dz_j.
    pub fn tangential(f: Vec<HoloPoly>, weight: Rat) -> Self {
        let n = f.len();
        GradedVectorField {
            f,
            f_w_linear: vec![GaussianRational::zero(); n],
            g: HoloPoly::zero(n),
            g_uses_w: false,
            w_part_scalar: Rat::zero(),
            weight,
        }
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn is_zero(&self) -> bool {
        self.f.iter().all(|p| p.is_zero())
            && self.f_w_linear.iter().all(|c| c.is_zero())
            && self.g.is_zero()
            && self.w_part_scalar.is_zero()
    }

    /// Apply the z-part of the field to a holomorphic polynomial:
    /// sum_j f[j] * dp/dz_j. The w-dependent pieces must be absent.
    pub fn apply(&self, p: &HoloPoly) -> HoloPoly {
        assert!(
            self.f_w_linear.iter().all(|c| c.is_zero()),
            "apply expects a field without w d/dz_j terms"
        );
        let n = p.n();
        let mut out = HoloPoly::zero(n);
        for (j, fj) in self.f.iter().enumerate() {
            if fj.is_zero() {
                continue;
            }
            out = out.add(&fj.mul(&p.differentiate(j)));
        }
        out
    }

    /// The n-by-n matrix C with f[j] = sum_k C[j][k] z_k, when every f[j]
    /// is homogeneous linear.
    pub fn linear_part(&self) -> Option<crate::polyalg::exact::GMatrix> {
        let n = self.n();
        for fj in &self.f {
            if !fj.is_zero() && fj.total_degree() != Some(1) {
                return None;
            }
        }
        let mut m = crate::polyalg::exact::GMatrix::zeros(n);
        for (j, fj) in self.f.iter().enumerate() {
            for (e, c) in fj.terms() {
                let k = e.iter().position(|&x| x == 1)?;
                m.set(j, k, c.clone());
            }
        }
        Some(m)
    }

    pub fn linear_part_f64(&self) -> Option<CMatrix> {
        self.linear_part().map(|m| m.to_cmatrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apply_raising_field() {
        // Y = z2 d/dz1 applied to z1 gives z2
        let n = 2;
        let y = GradedVectorField::tangential(
            vec![HoloPoly::var(n, 1), HoloPoly::zero(n)],
            Rat::zero(),
        );
        let out = y.apply(&HoloPoly::var(n, 0));
        assert_eq!(out, HoloPoly::var(n, 1));
        assert!(y.apply(&HoloPoly::var(n, 1)).is_zero());
    }

    #[test]
    fn linear_part_extraction() {
        let n = 2;
        // f1 = 2 z2, f2 = i z1
        let y = GradedVectorField::tangential(
            vec![
                HoloPoly::var(n, 1).scale(&GaussianRational::from_int(2)),
                HoloPoly::var(n, 0).scale(&GaussianRational::i()),
            ],
            Rat::zero(),
        );
        let m = y.linear_part().unwrap();
        assert_eq!(*m.get(0, 1), GaussianRational::from_int(2));
        assert_eq!(*m.get(1, 0), GaussianRational::i());
        assert!(m.get(0, 0).is_zero());
    }
}
