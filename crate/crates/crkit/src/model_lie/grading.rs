//! Exact computation of the graded components of the symmetry algebra of a
//! model hypersurface.
//!
//! Each admissible weight comes with a template for the unknown coefficients
//! and one or two defining polynomial identities that are R-linear in those
//! coefficients. Matching every monomial coefficient yields a rational
//! linear system whose kernel is the component, computed exactly.

use super::ModelLieError;
use crate::polyalg::exact::{rational_kernel, RatMatrix};
use crate::polyalg::{GaussianRational, GradedVectorField, HermPoly, HoloPoly, ModelHypersurface, Rat, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// Basis of one weighted slice of the symmetry algebra.
#[derive(Debug, Clone)]
pub struct GradedComponentBasis {
    pub weight: Rat,
    pub basis: Vec<GradedVectorField>,
    pub real_dimension: usize,
}

/// Monomial exponent vectors of exact total degree `d`, in a fixed order.
pub(crate) fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(n: usize, pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == n - 1 {
            current[pos] = left;
            out.push(current.clone());
            return;
        }
        for take in (0..=left).rev() {
            current[pos] = take;
            rec(n, pos + 1, left - take, current, out);
        }
    }
    if n == 0 {
        return out;
    }
    rec(n, 0, d, &mut current, &mut out);
    out
}

/// The two complex units spanning C over R, in unknown order (re, im).
fn real_units() -> [GaussianRational; 2] {
    [GaussianRational::one(), GaussianRational::i()]
}

/// One real unknown: its residual contribution to each equation.
type Column = Vec<HermPoly>;

/// Assemble the real coefficient-matching matrix and solve its kernel.
fn kernel_of_columns(columns: &[Column], eqs: usize) -> Vec<Vec<Rat>> {
    let mut keys: Vec<BTreeSet<(Vec<u32>, Vec<u32>)>> = vec![BTreeSet::new(); eqs];
    for col in columns {
        for (e, poly) in col.iter().enumerate() {
            for (key, _) in poly.terms() {
                keys[e].insert(key.clone());
            }
        }
    }
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (e, keyset) in keys.iter().enumerate() {
        for key in keyset {
            let mut row_re = Vec::with_capacity(columns.len());
            let mut row_im = Vec::with_capacity(columns.len());
            for col in columns {
                let c = col[e].coeff(&key.0, &key.1);
                row_re.push(c.re.clone());
                row_im.push(c.im.clone());
            }
            rows.push(row_re);
            rows.push(row_im);
        }
    }
    if rows.is_empty() {
        // no constraints: the whole unknown space is the kernel
        return (0..columns.len())
            .map(|i| {
                let mut v = vec![Rat::zero(); columns.len()];
                v[i] = Rat::one();
                v
            })
            .collect();
    }
    rational_kernel(&RatMatrix::from_rows(rows))
}

/// Complex coefficient from two adjacent real unknowns.
fn complex_of(x: &[Rat], idx: usize) -> GaussianRational {
    GaussianRational::new(x[2 * idx].clone(), x[2 * idx + 1].clone())
}

struct Derivatives {
    qz: Vec<HermPoly>,
    qzb: Vec<HermPoly>,
}

fn derivatives(model: &ModelHypersurface) -> Derivatives {
    let n = model.n();
    Derivatives {
        qz: (0..n).map(|j| model.q().differentiate(Var::Z(j))).collect(),
        qzb: (0..n).map(|j| model.q().differentiate(Var::ZBar(j))).collect(),
    }
}

fn z_mono(n: usize, mono: &[u32], c: &GaussianRational) -> HermPoly {
    HermPoly::monomial(n, mono.to_vec(), vec![0; n], c.clone())
}

fn zbar_mono(n: usize, mono: &[u32], c: &GaussianRational) -> HermPoly {
    HermPoly::monomial(n, vec![0; n], mono.to_vec(), c.clone())
}

/// Residual of the translation-like equation
/// 2i sum_j (a_j Q_{z_j} + conj(a_j) Q_{zbar_j}) - (g - conj(g)) for a single
/// unit unknown.
fn residual_translation(
    n: usize,
    der: &Derivatives,
    a: &[GaussianRational],
    g_mono: Option<(&[u32], &GaussianRational)>,
) -> HermPoly {
    let two_i = GaussianRational::from_parts(0, 1, 2, 1);
    let mut r = HermPoly::zero(n);
    for j in 0..n {
        if !a[j].is_zero() {
            r = r.add(&der.qz[j].scale(&(&two_i * &a[j])));
            r = r.add(&der.qzb[j].scale(&(&two_i * &a[j].conj())));
        }
    }
    if let Some((mono, v)) = g_mono {
        r = r.sub(&z_mono(n, mono, v));
        r = r.add(&zbar_mono(n, mono, &v.conj()));
    }
    r
}

/// Residual sum_j (f_j Q_{z_j} + conj(f_j) Q_{zbar_j}) for f_j = v z^mono.
fn residual_rotation_term(n: usize, der: &Derivatives, j: usize, mono: &[u32], v: &GaussianRational) -> HermPoly {
    z_mono(n, mono, v)
        .multiply(&der.qz[j])
        .add(&zbar_mono(n, mono, &v.conj()).multiply(&der.qzb[j]))
}

/// Compute the basis of the weighted component at `weight` exactly.
pub fn graded_component(
    model: &ModelHypersurface,
    weight: &Rat,
) -> Result<GradedComponentBasis, ModelLieError> {
    let n = model.n();
    let m = model.degree();
    let m_rat = Rat::from_integer(BigInt::from(m));
    let minus_one = -Rat::one();
    let inv_m = Rat::one() / m_rat.clone();

    if *weight == minus_one {
        // all of { a d/dw : a real }
        let mut field = GradedVectorField::zero(n, weight.clone());
        field.g = HoloPoly::constant(n, GaussianRational::one());
        return Ok(GradedComponentBasis { weight: weight.clone(), basis: vec![field], real_dimension: 1 });
    }
    if *weight == -&inv_m {
        return Ok(component_translation(model, weight));
    }
    if weight.is_zero() {
        return Ok(component_rotation(model, weight, false));
    }
    if *weight == Rat::one() {
        return Ok(component_top(model, weight));
    }
    if *weight == Rat::one() - &inv_m {
        return Ok(component_near_top(model, weight));
    }
    // tau/m with 1 <= tau <= m-2
    let scaled = weight * &m_rat;
    if scaled.is_integer() {
        let tau = scaled.to_integer();
        if tau >= BigInt::one() && tau <= BigInt::from(m.saturating_sub(2)) {
            let tau_u32 = num_traits::ToPrimitive::to_u32(&tau).unwrap();
            return Ok(component_interior(model, weight, tau_u32));
        }
    }
    Err(ModelLieError::BadWeight(weight.to_string()))
}

/// Weight -1/m: sum_j a_j d/dz_j + g(z) d/dw with g homogeneous of degree m-1.
fn component_translation(model: &ModelHypersurface, weight: &Rat) -> GradedComponentBasis {
    let n = model.n();
    let der = derivatives(model);
    let g_monos = monomials(n, model.degree() - 1);
    let mut columns: Vec<Column> = Vec::new();
    for j in 0..n {
        for unit in real_units() {
            let mut a = vec![GaussianRational::zero(); n];
            a[j] = unit;
            columns.push(vec![residual_translation(n, &der, &a, None)]);
        }
    }
    for mono in &g_monos {
        for unit in real_units() {
            let zero_a = vec![GaussianRational::zero(); n];
            columns.push(vec![residual_translation(n, &der, &zero_a, Some((mono, &unit)))]);
        }
    }
    let kernel = kernel_of_columns(&columns, 1);
    let basis = kernel
        .iter()
        .map(|x| {
            let mut field = GradedVectorField::zero(n, weight.clone());
            for j in 0..n {
                let a = complex_of(x, j);
                field.f[j] = HoloPoly::constant(n, a);
            }
            let mut g = HoloPoly::zero(n);
            for (k, mono) in g_monos.iter().enumerate() {
                g.add_term(mono.clone(), complex_of(x, n + k));
            }
            field.g = g;
            field
        })
        .collect::<Vec<_>>();
    GradedComponentBasis { weight: weight.clone(), basis, real_dimension: kernel.len() }
}

/// Weight 0: linear f_j plus a w d/dw; rigid variant drops the dilation.
fn component_rotation(model: &ModelHypersurface, weight: &Rat, rigid: bool) -> GradedComponentBasis {
    let n = model.n();
    let der = derivatives(model);
    let lin = monomials(n, 1);
    let mut columns: Vec<Column> = Vec::new();
    for j in 0..n {
        for mono in &lin {
            for unit in real_units() {
                columns.push(vec![residual_rotation_term(n, &der, j, mono, &unit)]);
            }
        }
    }
    if !rigid {
        columns.push(vec![model.q().scale(&(-&GaussianRational::one()))]);
    }
    let kernel = kernel_of_columns(&columns, 1);
    let basis = kernel
        .iter()
        .map(|x| {
            let mut field = GradedVectorField::zero(n, weight.clone());
            for j in 0..n {
                let mut f = HoloPoly::zero(n);
                for (k, mono) in lin.iter().enumerate() {
                    f.add_term(mono.clone(), complex_of(x, j * lin.len() + k));
                }
                field.f[j] = f;
            }
            if !rigid {
                field.w_part_scalar = x[x.len() - 1].clone();
            }
            field
        })
        .collect::<Vec<_>>();
    GradedComponentBasis { weight: weight.clone(), basis, real_dimension: kernel.len() }
}

/// Interior weights tau/m: purely tangential fields with homogeneous f_j of
/// degree tau + 1 annihilating Re applied to Q.
fn component_interior(model: &ModelHypersurface, weight: &Rat, tau: u32) -> GradedComponentBasis {
    let n = model.n();
    let der = derivatives(model);
    let monos = monomials(n, tau + 1);
    let mut columns: Vec<Column> = Vec::new();
    for j in 0..n {
        for mono in &monos {
            for unit in real_units() {
                columns.push(vec![residual_rotation_term(n, &der, j, mono, &unit)]);
            }
        }
    }
    let kernel = kernel_of_columns(&columns, 1);
    let basis = kernel
        .iter()
        .map(|x| {
            let mut field = GradedVectorField::zero(n, weight.clone());
            for j in 0..n {
                let mut f = HoloPoly::zero(n);
                for (k, mono) in monos.iter().enumerate() {
                    f.add_term(mono.clone(), complex_of(x, j * monos.len() + k));
                }
                field.f[j] = f;
            }
            field
        })
        .collect::<Vec<_>>();
    GradedComponentBasis { weight: weight.clone(), basis, real_dimension: kernel.len() }
}

/// Weight 1 - 1/m: (f_j(z) + a_j w) d/dz_j + g(z) w d/dw with f_j of degree
/// m and g of degree m-1, subject to the pair (a, g) lying in the weight
/// -1/m component and the displayed identity
/// 2 sum_j (f_j Q_{z_j} + conj(f_j) Q_{zbar_j}
///          + 2i Q (a_j Q_{z_j} - conj(a_j) Q_{zbar_j})) = Q (g + conj(g)).
fn component_near_top(model: &ModelHypersurface, weight: &Rat) -> GradedComponentBasis {
    let n = model.n();
    let m = model.degree();
    let der = derivatives(model);
    let f_monos = monomials(n, m);
    let g_monos = monomials(n, m - 1);
    let two = GaussianRational::from_int(2);
    let four_i = GaussianRational::from_parts(0, 1, 4, 1);
    let q = model.q();
    let mut columns: Vec<Column> = Vec::new();
    // f unknowns
    for j in 0..n {
        for mono in &f_monos {
            for unit in real_units() {
                let eq2 = residual_rotation_term(n, &der, j, mono, &unit).scale(&two);
                columns.push(vec![HermPoly::zero(n), eq2]);
            }
        }
    }
    // a unknowns
    for j in 0..n {
        for unit in real_units() {
            let mut a = vec![GaussianRational::zero(); n];
            a[j] = unit.clone();
            let eq1 = residual_translation(n, &der, &a, None);
            let eq2 = q
                .multiply(&der.qz[j])
                .scale(&(&four_i * &unit))
                .sub(&q.multiply(&der.qzb[j]).scale(&(&four_i * &unit.conj())));
            columns.push(vec![eq1, eq2]);
        }
    }
    // g unknowns
    for mono in &g_monos {
        for unit in real_units() {
            let zero_a = vec![GaussianRational::zero(); n];
            let eq1 = residual_translation(n, &der, &zero_a, Some((mono, &unit)));
            let gg = z_mono(n, mono, &unit).add(&zbar_mono(n, mono, &unit.conj()));
            let eq2 = q.multiply(&gg).scale(&(-&GaussianRational::one()));
            columns.push(vec![eq1, eq2]);
        }
    }
    let kernel = kernel_of_columns(&columns, 2);
    let f_count = n * f_monos.len();
    let basis = kernel
        .iter()
        .map(|x| {
            let mut field = GradedVectorField::zero(n, weight.clone());
            field.g_uses_w = true;
            for j in 0..n {
                let mut f = HoloPoly::zero(n);
                for (k, mono) in f_monos.iter().enumerate() {
                    f.add_term(mono.clone(), complex_of(x, j * f_monos.len() + k));
                }
                field.f[j] = f;
            }
            for j in 0..n {
                field.f_w_linear[j] = complex_of(x, f_count + j);
            }
            let mut g = HoloPoly::zero(n);
            for (k, mono) in g_monos.iter().enumerate() {
                g.add_term(mono.clone(), complex_of(x, f_count + n + k));
            }
            field.g = g;
            field
        })
        .collect::<Vec<_>>();
    GradedComponentBasis { weight: weight.clone(), basis, real_dimension: kernel.len() }
}

/// Weight 1: f_j(z) w d/dz_j + a w^2 d/dw with linear f_j and
/// sum_j f_j Q_{z_j} = a Q (no conjugate terms).
fn component_top(model: &ModelHypersurface, weight: &Rat) -> GradedComponentBasis {
    let n = model.n();
    let der = derivatives(model);
    let lin = monomials(n, 1);
    let mut columns: Vec<Column> = Vec::new();
    for j in 0..n {
        for mono in &lin {
            for unit in real_units() {
                columns.push(vec![z_mono(n, mono, &unit).multiply(&der.qz[j])]);
            }
        }
    }
    columns.push(vec![model.q().scale(&(-&GaussianRational::one()))]);
    let kernel = kernel_of_columns(&columns, 1);
    let basis = kernel
        .iter()
        .map(|x| {
            let mut field = GradedVectorField::zero(n, weight.clone());
            for j in 0..n {
                let mut f = HoloPoly::zero(n);
                for (k, mono) in lin.iter().enumerate() {
                    f.add_term(mono.clone(), complex_of(x, j * lin.len() + k));
                }
                field.f[j] = f;
            }
            field.w_part_scalar = x[x.len() - 1].clone();
            field
        })
        .collect::<Vec<_>>();
    GradedComponentBasis { weight: weight.clone(), basis, real_dimension: kernel.len() }
}

/// Weight-0 fields with zero dilation part.
pub fn rigid_rotations(model: &ModelHypersurface) -> Vec<GradedVectorField> {
    component_rotation(model, &Rat::zero(), true).basis
}

/// The defining identities of the component a field claims to belong to,
/// evaluated exactly; all must be zero polynomials for membership.
pub fn component_residuals(
    model: &ModelHypersurface,
    field: &GradedVectorField,
) -> Result<Vec<HermPoly>, ModelLieError> {
    let n = model.n();
    let m = model.degree();
    let der = derivatives(model);
    let weight = &field.weight;
    let m_rat = Rat::from_integer(BigInt::from(m));
    let inv_m = Rat::one() / m_rat;
    let two_i = GaussianRational::from_parts(0, 1, 2, 1);

    let translation_residual = |a: &[GaussianRational], g: &HoloPoly| -> HermPoly {
        let mut r = HermPoly::zero(n);
        for j in 0..n {
            r = r.add(&der.qz[j].scale(&(&two_i * &a[j])));
            r = r.add(&der.qzb[j].scale(&(&two_i * &a[j].conj())));
        }
        r.sub(&g.to_herm()).add(&g.conj_to_herm())
    };
    let rotation_residual = |f: &[HoloPoly]| -> HermPoly {
        let mut r = HermPoly::zero(n);
        for j in 0..n {
            r = r.add(&f[j].to_herm().multiply(&der.qz[j]));
            r = r.add(&f[j].conj_to_herm().multiply(&der.qzb[j]));
        }
        r
    };

    if *weight == -Rat::one() {
        return Ok(vec![HermPoly::zero(n)]);
    }
    if *weight == -&inv_m {
        let a: Vec<GaussianRational> = field.f.iter().map(|p| p.coeff(&vec![0; n])).collect();
        return Ok(vec![translation_residual(&a, &field.g)]);
    }
    if weight.is_zero() {
        let dilation = GaussianRational::from_rat(field.w_part_scalar.clone());
        return Ok(vec![rotation_residual(&field.f).sub(&model.q().scale(&dilation))]);
    }
    if *weight == Rat::one() {
        let mut r = HermPoly::zero(n);
        for j in 0..n {
            r = r.add(&field.f[j].to_herm().multiply(&der.qz[j]));
        }
        let dilation = GaussianRational::from_rat(field.w_part_scalar.clone());
        return Ok(vec![r.sub(&model.q().scale(&dilation))]);
    }
    if *weight == Rat::one() - &inv_m {
        let eq1 = translation_residual(&field.f_w_linear, &field.g);
        let q = model.q();
        let mut eq2 = rotation_residual(&field.f).scale(&GaussianRational::from_int(2));
        let four_i = GaussianRational::from_parts(0, 1, 4, 1);
        for j in 0..n {
            eq2 = eq2.add(&q.multiply(&der.qz[j]).scale(&(&four_i * &field.f_w_linear[j])));
            eq2 = eq2.sub(&q.multiply(&der.qzb[j]).scale(&(&four_i * &field.f_w_linear[j].conj())));
        }
        let gg = field.g.to_herm().add(&field.g.conj_to_herm());
        eq2 = eq2.sub(&q.multiply(&gg));
        return Ok(vec![eq1, eq2]);
    }
    // interior tau/m: purely tangential
    Ok(vec![rotation_residual(&field.f)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials(1, 3), vec![vec![3]]);
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials(2, 0), vec![vec![0, 0]]);
    }

    #[test]
    fn lewy_component_dimensions() {
        let model = fixtures::lewy_model();
        let dims: Vec<usize> = [rat(-1, 1), rat(-1, 2), rat(0, 1), rat(1, 2), rat(1, 1)]
            .iter()
            .map(|w| graded_component(&model, w).unwrap().real_dimension)
            .collect();
        assert_eq!(dims, vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn lewy_basis_fields_satisfy_their_identities() {
        let model = fixtures::lewy_model();
        for w in [rat(-1, 1), rat(-1, 2), rat(0, 1), rat(1, 2), rat(1, 1)] {
            let comp = graded_component(&model, &w).unwrap();
            for field in &comp.basis {
                for res in component_residuals(&model, field).unwrap() {
                    assert!(res.is_zero(), "nonzero residual at weight {w}");
                }
            }
        }
    }

    #[test]
    fn bad_weight_is_rejected() {
        let model = fixtures::lewy_model();
        assert!(matches!(graded_component(&model, &rat(3, 7)), Err(ModelLieError::BadWeight(_))));
        // m = 2 has no interior weights
        assert!(matches!(graded_component(&model, &rat(1, 4)), Err(ModelLieError::BadWeight(_))));
    }

    #[test]
    fn rigid_rotations_of_lewy_and_ball() {
        let lewy = fixtures::lewy_model();
        let rot = rigid_rotations(&lewy);
        assert_eq!(rot.len(), 1);
        // the generator is a real multiple of i z d/dz
        let c = rot[0].f[0].coeff(&[1]);
        assert!(c.re.is_zero() && !c.im.is_zero());

        // Im w = |z1|^2 + |z2|^2: rigid rotations form u(2), dimension 4
        let mut q = HermPoly::zero(2);
        q.add_term(vec![1, 0], vec![1, 0], GaussianRational::one());
        q.add_term(vec![0, 1], vec![0, 1], GaussianRational::one());
        let ball = ModelHypersurface::new(2, 2, q).unwrap();
        assert_eq!(rigid_rotations(&ball).len(), 4);
    }

    #[test]
    fn chain_model_has_trivial_top_and_octics_too() {
        for model in [fixtures::chain_model(), fixtures::octic1_model(), fixtures::octic2_model()] {
            let top = graded_component(&model, &Rat::one()).unwrap();
            assert_eq!(top.real_dimension, 0, "expected trivial top component");
        }
    }

    #[test]
    fn chain_model_interior_component_contains_the_raising_field() {
        let model = fixtures::chain_model();
        let comp = graded_component(&model, &rat(1, 5)).unwrap();
        assert_eq!(comp.real_dimension, 1);
        // the basis element must be a real multiple of the known field
        let y = fixtures::chain_field();
        let b = &comp.basis[0];
        let ratio = {
            let cb = b.f[0].coeff(&[2, 2]);
            let cy = y.f[0].coeff(&[2, 2]);
            &cb / &cy
        };
        assert!(!ratio.is_zero());
        for j in 0..2 {
            assert_eq!(b.f[j], y.f[j].scale(&ratio));
        }
    }

    #[test]
    fn octic1_weight_zero_dilation_only() {
        // g_0 of the octic plane model is 1-dimensional with nonzero dilation
        let model = fixtures::octic1_model();
        let comp = graded_component(&model, &Rat::zero()).unwrap();
        assert_eq!(comp.real_dimension, 1);
        assert!(!comp.basis[0].w_part_scalar.is_zero());
        assert!(rigid_rotations(&model).is_empty());
    }
}
