//! Holomorphic nondegeneracy test for model hypersurfaces.

use crate::polyalg::exact::{rational_kernel, RatMatrix};
use crate::polyalg::{GaussianRational, HermPoly, HoloPoly, ModelHypersurface, Rat, Var};
use num_traits::Zero;
use std::collections::BTreeSet;

use super::grading::monomials;

/// Search for nonzero holomorphic polynomial coefficients f_1..f_n of degree
/// at most `degree_bound` with sum_j f_j Q_{z_j} free of conjugate variables
/// (such a sum can be absorbed into the d/dw component, so the model is
/// holomorphically degenerate). Returns true when no such field exists,
/// otherwise false together with a witness.
///
/// Because Q is homogeneous the kernel is graded, so each homogeneous degree
/// is solved separately.
pub fn holomorphically_nondegenerate(
    model: &ModelHypersurface,
    degree_bound: u32,
) -> (bool, Option<Vec<HoloPoly>>) {
    let n = model.n();
    let qz: Vec<HermPoly> = (0..n).map(|j| model.q().differentiate(Var::Z(j))).collect();
    for deg in 0..=degree_bound {
        let monos = monomials(n, deg);
        // residual of each unit unknown: the non-holomorphic part of z^mono Q_{z_j}
        let mut columns: Vec<HermPoly> = Vec::new();
        for j in 0..n {
            for mono in &monos {
                for unit in [GaussianRational::one(), GaussianRational::i()] {
                    let prod = HermPoly::monomial(n, mono.clone(), vec![0; n], unit).multiply(&qz[j]);
                    let mut nonholo = HermPoly::zero(n);
                    for ((a, b), c) in prod.terms() {
                        if b.iter().any(|&x| x != 0) {
                            nonholo.add_term(a.clone(), b.clone(), c.clone());
                        }
                    }
                    columns.push(nonholo);
                }
            }
        }
        let mut keys: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
        for col in &columns {
            for (k, _) in col.terms() {
                keys.insert(k.clone());
            }
        }
        let kernel = if keys.is_empty() {
            (0..columns.len())
                .map(|i| {
                    let mut v = vec![Rat::zero(); columns.len()];
                    v[i] = Rat::from_integer(1.into());
                    v
                })
                .collect::<Vec<_>>()
        } else {
            let mut rows = Vec::new();
            for key in &keys {
                let mut row_re = Vec::with_capacity(columns.len());
                let mut row_im = Vec::with_capacity(columns.len());
                for col in &columns {
                    let c = col.coeff(&key.0, &key.1);
                    row_re.push(c.re.clone());
                    row_im.push(c.im.clone());
                }
                rows.push(row_re);
                rows.push(row_im);
            }
            rational_kernel(&RatMatrix::from_rows(rows))
        };
        if let Some(x) = kernel.first() {
            let mut witness: Vec<HoloPoly> = (0..n).map(|_| HoloPoly::zero(n)).collect();
            for j in 0..n {
                for (k, mono) in monos.iter().enumerate() {
                    let idx = j * monos.len() + k;
                    let c = GaussianRational::new(x[2 * idx].clone(), x[2 * idx + 1].clone());
                    witness[j].add_term(mono.clone(), c);
                }
            }
            return (false, Some(witness));
        }
    }
    (true, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::polyalg::ModelHypersurface;

    #[test]
    fn degenerate_cylinder() {
        // Q = |z1|^2 viewed in n = 2: d/dz2 is tangent
        let q = HermPoly::monomial(2, vec![1, 0], vec![1, 0], GaussianRational::one());
        let model = ModelHypersurface::new(2, 2, q).unwrap();
        let (nondeg, witness) = holomorphically_nondegenerate(&model, 2);
        assert!(!nondeg);
        let w = witness.unwrap();
        // witness uses only d/dz2
        assert!(w[0].is_zero());
        assert!(!w[1].is_zero());
    }

    #[test]
    fn hyperquadric_is_nondegenerate() {
        // Q = z1 zbar2 + z2 zbar1 at bound 3
        let mut q = HermPoly::zero(2);
        q.add_term(vec![1, 0], vec![0, 1], GaussianRational::one());
        q.add_term(vec![0, 1], vec![1, 0], GaussianRational::one());
        let model = ModelHypersurface::new(2, 2, q).unwrap();
        let (nondeg, _) = holomorphically_nondegenerate(&model, 3);
        assert!(nondeg);
    }

    #[test]
    fn octic_models_are_nondegenerate() {
        assert!(holomorphically_nondegenerate(&fixtures::octic1_model(), 8).0);
        assert!(holomorphically_nondegenerate(&fixtures::octic2_model(), 8).0);
    }
}
