//! Orbit spans, stationary minimality, and the seeded searches for strong
//! Levi nondegeneracy, strong pseudoconvexity and D-nondegeneracy.

use super::{QuadricError, QuadricModel};
use crate::numerics::{
    hermitian_eigen, inverse, rank_with_tol, real_rank, C64, CMatrix, RMatrix,
    ToleranceConfig,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Real and complex dimensions of span_R { V, XV, X^2 V, ... }.
#[derive(Debug, Clone)]
pub struct OrbitSpan {
    pub real_dim: usize,
    pub complex_dim: usize,
    /// Orthonormal basis (over R) of the real span, as complex vectors.
    pub basis: Vec<Vec<C64>>,
}

fn realify(v: &[C64]) -> Vec<f64> {
    v.iter().flat_map(|z| [z.re, z.im]).collect()
}

/// Krylov iteration V, XV, X^2 V, ... stopped once both span dimensions
/// stabilise (at most 2n vectors).
pub fn orbit_span(x: &CMatrix, v: &[C64], cfg: &ToleranceConfig) -> OrbitSpan {
    let n = v.len();
    let mut vectors: Vec<Vec<C64>> = vec![v.to_vec()];
    let mut current = v.to_vec();
    loop {
        let real_before = real_rank(&vectors.iter().map(|w| realify(w)).collect::<Vec<_>>(), cfg.rank_tol);
        if vectors.len() >= 2 * n {
            break;
        }
        current = x.mul_vec(&current);
        vectors.push(current.clone());
        let real_after = real_rank(&vectors.iter().map(|w| realify(w)).collect::<Vec<_>>(), cfg.rank_tol);
        if real_after == real_before {
            vectors.pop();
            break;
        }
    }
    let real_rows: Vec<Vec<f64>> = vectors.iter().map(|w| realify(w)).collect();
    let real_dim = real_rank(&real_rows, cfg.rank_tol);
    let complex_rows: Vec<Vec<C64>> = vectors.clone();
    let complex_dim = rank_with_tol(&CMatrix::from_rows(&complex_rows), cfg.rank_tol);

    // Orthonormal real basis from the SVD of the stacked 2n x k real matrix.
    let stacked = CMatrix::from_fn(2 * n, vectors.len(), |i, j| {
        C64::new(real_rows[j][i], 0.0)
    });
    let dec = crate::numerics::svd(&stacked);
    let smax = dec.sigma.first().copied().unwrap_or(0.0);
    let mut basis = Vec::new();
    for k in 0..dec.sigma.len() {
        if dec.sigma[k] > cfg.rank_tol * smax && dec.sigma[k] > 0.0 {
            let col: Vec<C64> = (0..n)
                .map(|i| C64::new(dec.u[(2 * i, k)].re, dec.u[(2 * i + 1, k)].re))
                .collect();
            basis.push(col);
        }
    }
    OrbitSpan { real_dim, complex_dim, basis }
}

/// The A_j compressed to the orbit span must stay R-linearly independent.
pub fn stationary_minimal(
    model: &QuadricModel,
    x: &CMatrix,
    v: &[C64],
    cfg: &ToleranceConfig,
) -> bool {
    let orbit = orbit_span(x, v, cfg);
    let k = orbit.basis.len();
    if k == 0 {
        return false;
    }
    let b = CMatrix::from_fn(model.n(), k, |i, j| orbit.basis[j][i]);
    let bh = b.adjoint();
    let rows: Vec<Vec<f64>> = model
        .matrices()
        .iter()
        .map(|aj| {
            let m = bh.mul(&aj.mul(&b));
            m.entries().iter().flat_map(|z| [z.re, z.im]).collect()
        })
        .collect();
    real_rank(&rows, cfg.rank_tol) == model.d()
}

fn unit_sphere_real(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.iter().map(|x| x / norm).collect();
        }
    }
}

fn unit_sphere_complex(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.iter().map(|z| z / norm).collect();
        }
    }
}

fn abs_det(m: &CMatrix) -> f64 {
    crate::numerics::svd(m).sigma.iter().product()
}

fn sv_ratio(m: &CMatrix) -> f64 {
    let s = crate::numerics::svd(m).sigma;
    match (s.first(), s.last()) {
        (Some(&hi), Some(&lo)) if hi > 0.0 => lo / hi,
        _ => 0.0,
    }
}

/// Search for b with sum b_j A_j invertible: the d coordinate directions
/// first, then seeded draws from the unit sphere (default 200).
pub fn strong_levi_nondegenerate(model: &QuadricModel, seed: u64) -> Option<Vec<f64>> {
    let d = model.d();
    let accept = |b: &[f64]| -> bool {
        let m = model.combine_real(b);
        sv_ratio(&m) > 1e-8 && abs_det(&m) > 1e-12
    };
    for j in 0..d {
        let mut b = vec![0.0; d];
        b[j] = 1.0;
        if accept(&b) {
            return Some(b);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let b = unit_sphere_real(&mut rng, d);
        if accept(&b) {
            return Some(b);
        }
    }
    None
}

/// Maximise lambda_min(sum b_j A_j) over the unit sphere by seeded restarts
/// with coordinate ascent and step halving. Returns a certificate b when the
/// best value exceeds rank_tol, and the best value reached either way.
pub fn strongly_pseudoconvex_search(
    model: &QuadricModel,
    restarts: usize,
    seed: u64,
) -> (Option<Vec<f64>>, f64) {
    let d = model.d();
    let lambda_min = |b: &[f64]| -> f64 {
        let m = model.combine_real(b);
        match hermitian_eigen(&m, 1e-9) {
            Ok((vals, _)) => vals[0],
            Err(_) => f64::NEG_INFINITY,
        }
    };
    let normalize = |b: &mut Vec<f64>| {
        let n: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 0.0 {
            for x in b.iter_mut() {
                *x /= n;
            }
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best_val = f64::NEG_INFINITY;
    let mut best_b: Option<Vec<f64>> = None;
    for restart in 0..restarts.max(1) {
        let mut b = if restart < d {
            let mut e = vec![0.0; d];
            e[restart] = 1.0;
            e
        } else {
            unit_sphere_real(&mut rng, d)
        };
        let mut val = lambda_min(&b);
        let mut step = 0.5;
        for _ in 0..100 {
            let mut improved = false;
            for k in 0..d {
                for sgn in [1.0, -1.0] {
                    let mut cand = b.clone();
                    cand[k] += sgn * step;
                    normalize(&mut cand);
                    let cv = lambda_min(&cand);
                    if cv > val {
                        val = cv;
                        b = cand;
                        improved = true;
                    }
                }
            }
            if !improved {
                step *= 0.5;
                if step < 1e-6 {
                    break;
                }
            }
        }
        if val > best_val {
            best_val = val;
            best_b = Some(b);
        }
    }
    let rank_tol = ToleranceConfig::default().rank_tol;
    if best_val > rank_tol {
        (best_b, best_val)
    } else {
        (None, best_val)
    }
}

/// Outcome of the D-nondegeneracy search.
#[derive(Debug, Clone, PartialEq)]
pub enum DNondegeneracy {
    /// d > 2n: no V can work.
    NoneByDimension,
    /// A direction V certifying invertibility of Re(tconj(D) (sum b A)^-1 D).
    Witness(Vec<C64>),
    /// Sampling found nothing (probabilistic only).
    NotFound { trials: usize },
}

/// Decide D-nondegeneracy at b by the dimension obstruction and seeded
/// sampling of directions V.
pub fn d_nondegenerate(
    model: &QuadricModel,
    b: &[f64],
    trials: usize,
    seed: u64,
) -> Result<DNondegeneracy, QuadricError> {
    let (n, d) = (model.n(), model.d());
    if d > 2 * n {
        return Ok(DNondegeneracy::NoneByDimension);
    }
    let combined = model.combine_real(b);
    let inv = inverse(&combined, 1e-9).map_err(|_| QuadricError::SingularA)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let v = unit_sphere_complex(&mut rng, n);
        let cols: Vec<Vec<C64>> = (0..d).map(|j| model.matrix(j).mul_vec(&v)).collect();
        let mut m = RMatrix::zeros(d, d);
        for j in 0..d {
            for s in 0..d {
                let solved = inv.mul_vec(&cols[s]);
                let val: C64 = cols[j].iter().zip(&solved).map(|(a, b)| a.conj() * b).sum();
                m[(j, s)] = val.re;
            }
        }
        if m.invertible(1e-8) {
            return Ok(DNondegeneracy::Witness(v));
        }
    }
    Ok(DNondegeneracy::NotFound { trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quadric::{solve_small_x, JetParameters};

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn orbit_of_zero_x_is_v_alone() {
        let x = CMatrix::zeros(3, 3);
        let v = vec![c(1.0, 0.0), c(0.0, 0.0), c(2.0, -1.0)];
        let orbit = orbit_span(&x, &v, &cfg());
        assert_eq!(orbit.real_dim, 1);
        assert_eq!(orbit.complex_dim, 1);
        assert_eq!(orbit.basis.len(), 1);
    }

    #[test]
    fn orbit_of_imaginary_diagonal_has_real_dim_three() {
        // X = diag(i t, 0), V = (1, 1): brute-force oracle gives rank 3 of
        // {(1,1), (it,0), (-t^2,0)} over R.
        let t = 0.08;
        let x = CMatrix::diag(&[c(0.0, t), c(0.0, 0.0)]);
        let v = vec![c(1.0, 0.0), c(1.0, 0.0)];
        let orbit = orbit_span(&x, &v, &cfg());
        assert_eq!(orbit.real_dim, 3);
        assert_eq!(orbit.complex_dim, 2);
    }

    #[test]
    fn fixture_orbit_spans_all_of_c3() {
        let model = fixtures::quadric_c10();
        let params = fixtures::c10_params(0.2);
        let sol = solve_small_x(&model, &params, &cfg()).unwrap();
        let orbit = orbit_span(&sol.x, &params.v, &cfg());
        assert_eq!(orbit.complex_dim, 3);
        assert_eq!(orbit.real_dim, 3);
    }

    #[test]
    fn stationary_minimality_examples() {
        // Fixture: orbit basis invertible, A_j independent, so minimal.
        let model = fixtures::quadric_c10();
        let params = fixtures::c10_params(0.2);
        let sol = solve_small_x(&model, &params, &cfg()).unwrap();
        assert!(stationary_minimal(&model, &sol.x, &params.v, &cfg()));

        // d = 2 diagonal model compressed to e1 kills A_2.
        let a1 = CMatrix::diag(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let a2 = CMatrix::diag(&[c(0.0, 0.0), c(1.0, 0.0)]);
        let model2 = QuadricModel::new(2, vec![a1, a2]).unwrap();
        let x = CMatrix::zeros(2, 2);
        let v = vec![c(1.0, 0.0), c(0.0, 0.0)];
        assert!(!stationary_minimal(&model2, &x, &v, &cfg()));
    }

    #[test]
    fn minimality_is_invariant_under_basis_recombination() {
        let model = fixtures::quadric_c10();
        let params = fixtures::c10_params(0.2);
        let sol = solve_small_x(&model, &params, &cfg()).unwrap();
        let orbit = orbit_span(&sol.x, &params.v, &cfg());
        let k = orbit.basis.len();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        // random invertible real recombination of the basis
        for _ in 0..5 {
            let g = RMatrix::from_rows(
                &(0..k)
                    .map(|_| (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect::<Vec<f64>>())
                    .collect::<Vec<_>>(),
            );
            if g.det().abs() < 1e-3 {
                continue;
            }
            let b = CMatrix::from_fn(model.n(), k, |i, j| orbit.basis[j][i]);
            let recomb = b.mul(&g.to_cmatrix());
            let bh = recomb.adjoint();
            let rows: Vec<Vec<f64>> = model
                .matrices()
                .iter()
                .map(|aj| {
                    let m = bh.mul(&aj.mul(&recomb));
                    m.entries().iter().flat_map(|z| [z.re, z.im]).collect()
                })
                .collect();
            assert_eq!(real_rank(&rows, 1e-9), model.d());
        }
    }

    #[test]
    fn strong_levi_search_examples() {
        let model = fixtures::quadric_c10();
        let b = strong_levi_nondegenerate(&model, 0).unwrap();
        // the first coordinate direction works: A_1 = diag(1,1,-1)
        assert_eq!(b, vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

        let zero = QuadricModel::new(2, vec![CMatrix::zeros(2, 2)]);
        // all-zero matrix is Hermitian, builds fine, but admits no b
        assert!(strong_levi_nondegenerate(&zero.unwrap(), 0).is_none());

        let a1 = CMatrix::diag(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let a2 = CMatrix::diag(&[c(0.0, 0.0), c(1.0, 0.0)]);
        let model2 = QuadricModel::new(2, vec![a1, a2]).unwrap();
        assert!(strong_levi_nondegenerate(&model2, 0).is_some());
    }

    #[test]
    fn pseudoconvex_search_examples() {
        let ident = QuadricModel::new(1, vec![CMatrix::identity(1)]).unwrap();
        let (b, val) = strongly_pseudoconvex_search(&ident, 4, 0);
        assert!(b.is_some());
        assert!((val - 1.0).abs() < 1e-9);

        let indef = QuadricModel::new(2, vec![CMatrix::diag(&[c(1.0, 0.0), c(-1.0, 0.0)])]).unwrap();
        let (b, val) = strongly_pseudoconvex_search(&indef, 8, 0);
        assert!(b.is_none());
        assert!(val <= 0.0);
    }

    #[test]
    fn d_nondegeneracy_examples() {
        // codimension obstruction: d = 7 > 2n = 6
        let model = fixtures::quadric_c10();
        let b = vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        assert_eq!(d_nondegenerate(&model, &b, 16, 0).unwrap(), DNondegeneracy::NoneByDimension);

        // d = 1, A_1 = (1): any V works
        let small = QuadricModel::new(1, vec![CMatrix::identity(1)]).unwrap();
        assert!(matches!(
            d_nondegenerate(&small, &[1.0], 16, 0).unwrap(),
            DNondegeneracy::Witness(_)
        ));
    }
}
