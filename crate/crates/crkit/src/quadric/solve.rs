//! The small matrix solution, its Re a_s derivatives, the Stein series K_j,
//! and the matrices deciding D(a)-nondegeneracy and 1-jet invertibility.

use super::{JetParameters, QuadricError, QuadricModel, SmallSolution};
use crate::numerics::{inverse, spectral_norm, C64, CMatrix, RMatrix, ToleranceConfig};

/// Solve PX^2 + AX + tconj(P) = 0 for the unique solution with |X| < 1 by
/// the fixed-point iteration X <- -A^-1 (P X^2 + tconj(P)) from X = 0.
///
/// Requires A invertible and the contraction margin
/// 2 * |A^-1 P| * |A^-1 tconj(P)| < 1/2.
pub fn solve_small_x(
    model: &QuadricModel,
    params: &JetParameters,
    cfg: &ToleranceConfig,
) -> Result<SmallSolution, QuadricError> {
    let n = model.n();
    let a_mat = params.a_matrix(model);
    let p_mat = params.p_matrix(model);
    // tconj(P) is the adjoint of P.
    let p_tbar = p_mat.adjoint();
    let a_inv = inverse(&a_mat, cfg.rank_tol).map_err(|_| QuadricError::SingularA)?;
    let margin =
        2.0 * spectral_norm(&a_inv.mul(&p_mat)) * spectral_norm(&a_inv.mul(&p_tbar));
    if margin >= 0.5 {
        return Err(QuadricError::NoContraction { margin });
    }
    let mut x = CMatrix::zeros(n, n);
    let mut iterations = 0usize;
    let scale = p_tbar.max_abs().max(1.0);
    for it in 0..cfg.max_iterations {
        iterations = it + 1;
        let next = a_inv.mul(&p_mat.mul(&x).mul(&x).add(&p_tbar)).scale(C64::new(-1.0, 0.0));
        let step = next.sub(&x).max_abs();
        x = next;
        if step <= 1e-16 * scale.max(x.max_abs()) {
            break;
        }
    }
    let residual_mat = p_mat.mul(&x).mul(&x).add(&a_mat.mul(&x)).add(&p_tbar);
    let residual = spectral_norm(&residual_mat);
    if residual > cfg.residual_tol {
        return Err(QuadricError::NoConvergence { residual });
    }
    let norm = spectral_norm(&x);
    if norm >= 1.0 - 1e-9 {
        return Err(QuadricError::NormTooLarge { norm });
    }
    Ok(SmallSolution { x, residual, iterations, norm })
}

/// Stein series K_j = sum_r (tconj(X))^r A_j X^r, truncated when the term
/// norm falls below `series_tail_tol`.
pub fn stein_k(
    model: &QuadricModel,
    x: &CMatrix,
    j: usize,
    cfg: &ToleranceConfig,
) -> Result<CMatrix, QuadricError> {
    let xh = x.adjoint(); // tconj(X)
    let mut k = CMatrix::zeros(model.n(), model.n());
    let mut term = model.matrix(j).clone();
    for _ in 0..cfg.max_iterations {
        k = k.add(&term);
        term = xh.mul(&term).mul(x);
        let t = spectral_norm(&term);
        if t < cfg.series_tail_tol {
            return Ok(k.add(&term));
        }
    }
    Err(QuadricError::Diverged { terms: cfg.max_iterations })
}

/// Partial derivative of the small solution with respect to Re a_s, summed
/// as sum_r (-1)^{r+1} M^r N_s X^r with
/// M = (I + A^-1 P X)^-1 A^-1 P and N_s = (I + A^-1 P X)^-1 A^-1 A_s (I-X)^2.
pub fn diff_x_re_a(
    model: &QuadricModel,
    params: &JetParameters,
    x: &CMatrix,
    s: usize,
    cfg: &ToleranceConfig,
) -> Result<CMatrix, QuadricError> {
    let n = model.n();
    let id = CMatrix::identity(n);
    let a_mat = params.a_matrix(model);
    let p_mat = params.p_matrix(model);
    let a_inv = inverse(&a_mat, cfg.rank_tol).map_err(|_| QuadricError::SingularA)?;
    let front = inverse(&id.add(&a_inv.mul(&p_mat).mul(x)), cfg.rank_tol)
        .map_err(|_| QuadricError::SingularA)?;
    let m_fac = front.mul(&a_inv).mul(&p_mat);
    let imx = id.sub(x);
    let n_s = front.mul(&a_inv).mul(model.matrix(s)).mul(&imx).mul(&imx);
    let mut left = CMatrix::identity(n);
    let mut right = CMatrix::identity(n);
    let mut acc = CMatrix::zeros(n, n);
    let mut sign = -1.0; // (-1)^{r+1} at r = 0
    for _ in 0..cfg.max_iterations {
        let term = left.mul(&n_s).mul(&right).scale(C64::new(sign, 0.0));
        acc = acc.add(&term);
        if spectral_norm(&term) < cfg.series_tail_tol {
            return Ok(acc);
        }
        left = left.mul(&m_fac);
        right = x.mul(&right);
        sign = -sign;
    }
    Err(QuadricError::Diverged { terms: cfg.max_iterations })
}

/// The real d-by-d matrix Re sum_r tconj(V) (tconj(X))^r A_j A^-1 A_s X^r V
/// whose invertibility defines D(a)-nondegeneracy at (a, V). At a = 0 it
/// reduces to the single-term D-nondegeneracy matrix.
pub fn da_matrix(
    model: &QuadricModel,
    params: &JetParameters,
    x: &CMatrix,
    cfg: &ToleranceConfig,
) -> Result<RMatrix, QuadricError> {
    let d = model.d();
    let a_mat = params.a_matrix(model);
    let a_inv = inverse(&a_mat, cfg.rank_tol).map_err(|_| QuadricError::SingularA)?;
    let mut out = RMatrix::zeros(d, d);
    let mut xr_v = params.v.clone();
    for it in 0..cfg.max_iterations {
        // columns A_j X^r V and A^-1 A_s X^r V
        let cols: Vec<Vec<C64>> = (0..d).map(|j| model.matrix(j).mul_vec(&xr_v)).collect();
        let solved: Vec<Vec<C64>> = cols.iter().map(|c| a_inv.mul_vec(c)).collect();
        let mut term_max = 0.0f64;
        for j in 0..d {
            for s in 0..d {
                let v: C64 = cols[j].iter().zip(&solved[s]).map(|(x, y)| x.conj() * y).sum();
                out[(j, s)] += v.re;
                term_max = term_max.max(v.norm());
            }
        }
        if term_max < cfg.series_tail_tol {
            return Ok(out);
        }
        let _ = it;
        xr_v = x.mul_vec(&xr_v);
    }
    Err(QuadricError::Diverged { terms: cfg.max_iterations })
}

/// Middle block of the 1-jet map: the d real numbers
/// tconj(V) (I - tconj(X)) K_j (I - X) V.
pub fn jet1_middle(
    model: &QuadricModel,
    params: &JetParameters,
    x: &CMatrix,
    cfg: &ToleranceConfig,
) -> Result<Vec<f64>, QuadricError> {
    let n = model.n();
    let id = CMatrix::identity(n);
    let right = id.sub(x).mul_vec(&params.v);
    let left: Vec<C64> = right.iter().map(|z| z.conj()).collect();
    let mut vals = Vec::with_capacity(model.d());
    for j in 0..model.d() {
        let k = stein_k(model, x, j, cfg)?;
        let kv = k.mul_vec(&right);
        let v: C64 = left.iter().zip(&kv).map(|(a, b)| a * b).sum();
        vals.push(v.re);
    }
    Ok(vals)
}

/// The d-by-d matrix Re sum_r tconj(V)(I - tconj(X))^2 (tconj(X))^r K_j
/// X_{Re a_s} X^r V. Up to the factor -2 this is the derivative of the
/// middle 1-jet block with respect to Re a_s; it is invertible exactly when
/// the 1-jet map is a local diffeomorphism at (a, V).
pub fn jet_jacobian_block(
    model: &QuadricModel,
    params: &JetParameters,
    x: &CMatrix,
    cfg: &ToleranceConfig,
) -> Result<RMatrix, QuadricError> {
    let n = model.n();
    let d = model.d();
    let id = CMatrix::identity(n);
    let ks: Vec<CMatrix> = (0..d).map(|j| stein_k(model, x, j, cfg)).collect::<Result<_, _>>()?;
    let dxs: Vec<CMatrix> = (0..d)
        .map(|s| diff_x_re_a(model, params, x, s, cfg))
        .collect::<Result<_, _>>()?;
    let imx = id.sub(x);
    let mut out = RMatrix::zeros(d, d);
    // The row vector tconj(V)(I - tconj(X))^2 (tconj(X))^r is the entrywise
    // conjugate of w_r = X^r (I - X)^2 V, so track w_r instead.
    let mut w = imx.mul_vec(&imx.mul_vec(&params.v));
    let mut xr_v = params.v.clone();
    for _ in 0..cfg.max_iterations {
        let mut term_max = 0.0f64;
        for s in 0..d {
            let dx_v = dxs[s].mul_vec(&xr_v);
            for j in 0..d {
                let kdx = ks[j].mul_vec(&dx_v);
                let v: C64 = w.iter().zip(&kdx).map(|(a, b)| a.conj() * b).sum();
                out[(j, s)] += v.re;
                term_max = term_max.max(v.norm());
            }
        }
        if term_max < cfg.series_tail_tol {
            return Ok(out);
        }
        w = x.mul_vec(&w);
        xr_v = x.mul_vec(&xr_v);
    }
    Err(QuadricError::Diverged { terms: cfg.max_iterations })
}
