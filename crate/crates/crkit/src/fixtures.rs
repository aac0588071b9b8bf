//! Built-in models used by the fixture runner and the test suites.

use crate::numerics::{C64, CMatrix};
use crate::polyalg::{GaussianRational, HermPoly, HoloPoly, ModelHypersurface, Rat};
use crate::quadric::{JetParameters, QuadricModel};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn g(num: i64, den: i64) -> GaussianRational {
    GaussianRational::from_parts(num, den, 0, 1)
}

fn gi(num: i64, den: i64) -> GaussianRational {
    GaussianRational::from_parts(0, 1, num, den)
}

/// Codimension-7 quadric in C^10: seven 3x3 Hermitian forms.
pub fn quadric_c10() -> QuadricModel {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let mi = c(0.0, -1.0);
    let mats = vec![
        CMatrix::from_rows(&[vec![o, z, z], vec![z, o, z], vec![z, z, -o]]),
        CMatrix::from_rows(&[vec![o, z, z], vec![z, -o, z], vec![z, z, z]]),
        CMatrix::from_rows(&[vec![z, z, z], vec![z, z, o], vec![z, o, z]]),
        CMatrix::from_rows(&[vec![z, o, z], vec![o, z, z], vec![z, z, z]]),
        CMatrix::from_rows(&[vec![z, z, i], vec![z, z, z], vec![mi, z, z]]),
        CMatrix::from_rows(&[vec![z, z, z], vec![z, z, i], vec![z, mi, z]]),
        CMatrix::from_rows(&[vec![z, i, z], vec![mi, z, z], vec![z, z, z]]),
    ];
    QuadricModel::new(3, mats).expect("builtin quadric is valid")
}

/// Jet parameters for the codimension-7 quadric: b = (1+2e, 2e, 0, ..., 0),
/// a = (e, e, 0, ..., 0), V = (1,1,1). With these, A = A_1 and
/// P = e (A_1 + A_2).
pub fn c10_params(eps: f64) -> JetParameters {
    let mut b = vec![0.0; 7];
    b[0] = 1.0 + 2.0 * eps;
    b[1] = 2.0 * eps;
    let mut a = vec![c(0.0, 0.0); 7];
    a[0] = c(eps, 0.0);
    a[1] = c(eps, 0.0);
    JetParameters::new(b, a, vec![c(1.0, 0.0); 3])
}

/// Small roots of 2e x^2 + x + 2e = 0 and e x^2 + x + e = 0; the diagonal of
/// the small solution for the codimension-7 quadric at parameter e.
pub fn c10_roots(eps: f64) -> (f64, f64) {
    let alpha = (-1.0 + (1.0 - 16.0 * eps * eps).sqrt()) / (4.0 * eps);
    let gamma = (-1.0 + (1.0 - 4.0 * eps * eps).sqrt()) / (2.0 * eps);
    (alpha, gamma)
}

/// Lewy hypersurface: Im w = |z|^2 (n = 1, m = 2).
pub fn lewy_model() -> ModelHypersurface {
    let q = HermPoly::monomial(1, vec![1], vec![1], GaussianRational::one());
    ModelHypersurface::new(1, 2, q).expect("Lewy model is valid")
}

/// Octic plane model: Im w = |z|^8 + |z|^6 (Re z)^2 (n = 1, m = 8).
pub fn octic1_model() -> ModelHypersurface {
    let mut q = HermPoly::zero(1);
    q.add_term(vec![4], vec![4], g(3, 2));
    q.add_term(vec![5], vec![3], g(1, 4));
    q.add_term(vec![3], vec![5], g(1, 4));
    ModelHypersurface::new(1, 8, q).expect("octic1 model is valid")
}

/// Octic pair model: Im w = |z1|^8 + |z1|^6 (Re z1)^2 + |z2|^8 (n = 2, m = 8).
pub fn octic2_model() -> ModelHypersurface {
    let mut q = HermPoly::zero(2);
    q.add_term(vec![4, 0], vec![4, 0], g(3, 2));
    q.add_term(vec![5, 0], vec![3, 0], g(1, 4));
    q.add_term(vec![3, 0], vec![5, 0], g(1, 4));
    q.add_term(vec![0, 4], vec![0, 4], g(1, 1));
    ModelHypersurface::new(2, 8, q).expect("octic2 model is valid")
}

/// First chain polynomial: P = i z1^2 z2^3 (z1 - z2).
pub fn chain_p() -> HoloPoly {
    let mut p = HoloPoly::zero(2);
    p.add_term(vec![3, 3], gi(1, 1));
    p.add_term(vec![2, 4], gi(-1, 1));
    p
}

/// Second chain polynomial: Q = 3 z1^3 z2^5 (z1 - z2).
pub fn chain_q() -> HoloPoly {
    let mut p = HoloPoly::zero(2);
    p.add_term(vec![4, 5], g(3, 1));
    p.add_term(vec![3, 6], g(-3, 1));
    p
}

/// Single-chain model in C^3: Im w = P conj(Q) + Q conj(P), degree 15.
pub fn chain_model() -> ModelHypersurface {
    let p = chain_p();
    let q = chain_q();
    let herm = p
        .to_herm()
        .multiply(&q.conj_to_herm())
        .add(&q.to_herm().multiply(&p.conj_to_herm()));
    ModelHypersurface::new(2, 15, herm).expect("chain model is valid")
}

/// The raising field Y = z1 z2^2 (5 z1 - 6 z2) d/dz1 - z2^3 (4 z1 - 3 z2) d/dz2.
pub fn chain_field() -> crate::polyalg::GradedVectorField {
    let mut f1 = HoloPoly::zero(2);
    f1.add_term(vec![2, 2], g(5, 1));
    f1.add_term(vec![1, 3], g(-6, 1));
    let mut f2 = HoloPoly::zero(2);
    f2.add_term(vec![1, 3], g(-4, 1));
    f2.add_term(vec![0, 4], g(3, 1));
    crate::polyalg::GradedVectorField::tangential(vec![f1, f2], Rat::new(1.into(), 5.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_models_validate() {
        let q = quadric_c10();
        assert_eq!((q.n(), q.d()), (3, 7));
        assert!(q.independent());
        assert_eq!(lewy_model().degree(), 2);
        assert_eq!(octic1_model().degree(), 8);
        assert_eq!(octic2_model().degree(), 8);
        assert_eq!(chain_model().degree(), 15);
        assert!(chain_model().q().is_real_valued());
    }

    #[test]
    fn c10_roots_at_one_fifth() {
        let (alpha, gamma) = c10_roots(0.2);
        assert!((alpha + 0.5).abs() < 1e-15);
        assert!((gamma - (21f64.sqrt() - 5.0) / 2.0).abs() < 1e-15);
    }
}
