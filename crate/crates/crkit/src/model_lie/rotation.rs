//! Classification of weight-0 symmetries: split the linear part into real
//! diagonal, imaginary diagonal and nilpotent pieces.
//!
//! The semisimple/nilpotent split is computed exactly over Gaussian
//! rationals (Newton iteration against the squarefree part of the
//! characteristic polynomial), so "has a nilpotent part" is an exact
//! decision. Eigenvalues are float roots of the squarefree part; the
//! real/imaginary flags use the clustering tolerance.

use super::ModelLieError;
use crate::numerics::{C64, CMatrix};
use crate::polyalg::exact::{
    charpoly, gpoly_degree, gpoly_derivative, gpoly_div_exact, gpoly_eval_matrix, gpoly_gcd, GMatrix,
};
use crate::polyalg::GradedVectorField;

#[derive(Debug, Clone)]
pub struct RotationClassification {
    pub linear_map: CMatrix,
    pub real_diag_part: CMatrix,
    pub imag_diag_part: CMatrix,
    pub nilpotent_part: CMatrix,
    /// Distinct eigenvalues of the linear part.
    pub eigenvalues: Vec<C64>,
    pub real_diagonal_present: bool,
    pub imaginary_diagonal_present: bool,
    pub nilpotent_present: bool,
}

/// Deterministic Durand-Kerner root finder for a monic polynomial given by
/// low-to-high coefficients (leading 1 included).
fn roots_monic(coeffs: &[C64]) -> Vec<C64> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
    let seed = C64::new(0.4, 0.9);
    let mut xs: Vec<C64> = (0..deg)
        .map(|k| seed.powu(k as u32 + 1) * radius)
        .collect();
    let eval = |x: C64| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    for _ in 0..300 {
        let mut max_step = 0.0f64;
        for j in 0..deg {
            let mut denom = C64::new(1.0, 0.0);
            for l in 0..deg {
                if l != j {
                    denom *= xs[j] - xs[l];
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let step = eval(xs[j]) / denom;
            xs[j] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-15 * radius {
            break;
        }
    }
    xs
}

/// Classify the linear part of a weight-0 field.
pub fn classify_rotation(
    field: &GradedVectorField,
    tol: f64,
) -> Result<RotationClassification, ModelLieError> {
    let c_exact = field.linear_part().ok_or(ModelLieError::NotLinear)?;
    classify_linear_map(&c_exact, tol)
}

/// Classification of an exact linear map (see classify_rotation).
pub fn classify_linear_map(
    c_exact: &GMatrix,
    tol: f64,
) -> Result<RotationClassification, ModelLieError> {
    let n = c_exact.n();
    let f = charpoly(c_exact);
    let fp = gpoly_derivative(&f);
    let g = gpoly_div_exact(&f, &gpoly_gcd(&f, &fp));

    // Newton iteration towards the semisimple part: d <- d - g(d) g'(d)^-1.
    let gp = gpoly_derivative(&g);
    let mut d = c_exact.clone();
    for _ in 0..(n + 2) {
        let gd = gpoly_eval_matrix(&g, &d);
        if gd.is_zero() {
            break;
        }
        let gpd_inv = gpoly_eval_matrix(&gp, &d)
            .inverse()
            .ok_or(ModelLieError::NotLinear)?;
        d = d.sub(&gd.mul(&gpd_inv));
    }
    let nil = c_exact.sub(&d);
    let nilpotent_present = !nil.is_zero();

    // Float eigenvalues: roots of the squarefree part are simple.
    let monic: Vec<C64> = g.iter().map(|c| c.to_c64()).collect();
    let eigenvalues = roots_monic(&monic);
    let scale = eigenvalues
        .iter()
        .map(|z| z.norm())
        .fold(c_exact.to_cmatrix().max_abs(), f64::max)
        .max(1e-300);
    let real_diagonal_present = eigenvalues.iter().any(|z| z.re.abs() > tol * scale);
    let imaginary_diagonal_present = eigenvalues.iter().any(|z| z.im.abs() > tol * scale);

    // Spectral projectors of the semisimple part by Lagrange interpolation.
    let d_f64 = d.to_cmatrix();
    let k = eigenvalues.len();
    let mut real_diag_part = CMatrix::zeros(n, n);
    let mut imag_diag_part = CMatrix::zeros(n, n);
    for c_idx in 0..k {
        let mut proj = CMatrix::identity(n);
        for other in 0..k {
            if other == c_idx {
                continue;
            }
            let shifted = d_f64.sub(&CMatrix::identity(n).scale(eigenvalues[other]));
            proj = proj.mul(&shifted.scale(C64::new(1.0, 0.0) / (eigenvalues[c_idx] - eigenvalues[other])));
        }
        real_diag_part = real_diag_part.add(&proj.scale(C64::new(eigenvalues[c_idx].re, 0.0)));
        imag_diag_part = imag_diag_part.add(&proj.scale(C64::new(0.0, eigenvalues[c_idx].im)));
    }
    Ok(RotationClassification {
        linear_map: c_exact.to_cmatrix(),
        real_diag_part,
        imag_diag_part,
        nilpotent_part: nil.to_cmatrix(),
        eigenvalues,
        real_diagonal_present,
        imaginary_diagonal_present,
        nilpotent_present,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{GaussianRational, HoloPoly, Rat};
    use num_traits::Zero;

    fn field_of(fs: Vec<HoloPoly>) -> GradedVectorField {
        GradedVectorField::tangential(fs, Rat::zero())
    }

    #[test]
    fn imaginary_rotation() {
        // i z d/dz
        let f = HoloPoly::var(1, 0).scale(&GaussianRational::i());
        let c = classify_rotation(&field_of(vec![f]), 1e-9).unwrap();
        assert!(!c.real_diagonal_present);
        assert!(c.imaginary_diagonal_present);
        assert!(!c.nilpotent_present);
        assert!(c.real_diag_part.max_abs() < 1e-12);
    }

    #[test]
    fn real_diagonal_rotation() {
        // z1 d/dz1 - z2 d/dz2
        let f1 = HoloPoly::var(2, 0);
        let f2 = HoloPoly::var(2, 1).scale(&GaussianRational::from_int(-1));
        let c = classify_rotation(&field_of(vec![f1, f2]), 1e-9).unwrap();
        assert!(c.real_diagonal_present);
        assert!(!c.imaginary_diagonal_present);
        assert!(!c.nilpotent_present);
    }

    #[test]
    fn nilpotent_rotation() {
        // z2 d/dz1
        let f1 = HoloPoly::var(2, 1);
        let f2 = HoloPoly::zero(2);
        let c = classify_rotation(&field_of(vec![f1, f2]), 1e-9).unwrap();
        assert!(!c.real_diagonal_present);
        assert!(!c.imaginary_diagonal_present);
        assert!(c.nilpotent_present);
        // exact nilpotent part equals the matrix itself
        assert!((c.nilpotent_part[(0, 1)] - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn defective_jordan_block_with_shift() {
        // [[i, 1], [0, i]]: imaginary diagonal plus nilpotent
        let mut m = GMatrix::zeros(2);
        m.set(0, 0, GaussianRational::i());
        m.set(0, 1, GaussianRational::one());
        m.set(1, 1, GaussianRational::i());
        let c = classify_linear_map(&m, 1e-9).unwrap();
        assert!(c.nilpotent_present);
        assert!(c.imaginary_diagonal_present);
        assert!(!c.real_diagonal_present);
        // parts sum back to the linear map
        let sum = c.real_diag_part.add(&c.imag_diag_part).add(&c.nilpotent_part);
        assert!(sum.sub(&c.linear_map).max_abs() < 1e-10);
    }

    #[test]
    fn parts_reconstruct_generic_map() {
        // mixed spectrum {2, -3i}
        let mut m = GMatrix::zeros(2);
        m.set(0, 0, GaussianRational::from_int(2));
        m.set(0, 1, GaussianRational::from_int(5));
        m.set(1, 1, GaussianRational::from_parts(0, 1, -3, 1));
        let c = classify_linear_map(&m, 1e-9).unwrap();
        assert!(c.real_diagonal_present && c.imaginary_diagonal_present);
        assert!(!c.nilpotent_present);
        let sum = c.real_diag_part.add(&c.imag_diag_part).add(&c.nilpotent_part);
        assert!(sum.sub(&c.linear_map).max_abs() < 1e-10);
        // nilpotent part is exactly zero here
        assert_eq!(c.nilpotent_part.max_abs(), 0.0);
    }
}
