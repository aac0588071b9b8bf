//! Dense complex linear algebra shared by the quadric and model analyses.
//!
//! Everything here is deterministic: the eigen and SVD kernels are cyclic
//! Jacobi iterations with a fixed sweep order, so identical inputs produce
//! bit-identical outputs on every run.

use num_complex::Complex64;
use thiserror::Error;

pub type C64 = Complex64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is singular or badly conditioned (sigma_min/sigma_max = {ratio:e})")]
    Singular { ratio: f64 },
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

/// Tolerances shared by all numeric analyses.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ToleranceConfig {
    /// Bound on equation residuals (matrix equation, Stein identity, ...).
    pub residual_tol: f64,
    /// Relative singular-value cutoff for rank decisions.
    pub rank_tol: f64,
    /// Series terms below this norm terminate a summation.
    pub series_tail_tol: f64,
    /// Cap on iterations for fixed points and series.
    pub max_iterations: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            residual_tol: 1e-12,
            rank_tol: 1e-9,
            series_tail_tol: 1e-14,
            max_iterations: 10_000,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<(), NumericsError> {
        if self.residual_tol > 0.0
            && self.rank_tol > 0.0
            && self.series_tail_tol > 0.0
            && self.max_iterations >= 1
        {
            Ok(())
        } else {
            Err(NumericsError::Shape(
                "tolerances must be positive and max_iterations >= 1".into(),
            ))
        }
    }
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix { rows, cols, entries: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CMatrix { rows: r, cols: c, entries: rows.iter().flatten().copied().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diag(d: &[C64]) -> Self {
        let mut m = CMatrix::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    /// Column matrix from a vector.
    pub fn column(v: &[C64]) -> Self {
        CMatrix { rows: v.len(), cols: 1, entries: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn col_vec(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> CMatrix {
        CMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|z| z.conj()).collect() }
    }

    pub fn scale(&self, s: C64) -> CMatrix {
        CMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|z| z * s).collect() }
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Deviation from being Hermitian, measured in Frobenius norm.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.sub(&self.adjoint()).frobenius_norm()
    }

    pub fn real_part(&self) -> RMatrix {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z.re).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.entries[i * self.cols + j]
    }
}

/// Dense row-major real matrix; used for the real d-by-d verdict matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix { rows, cols, entries: vec![0.0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RMatrix { rows: r, cols: c, entries: rows.iter().flatten().copied().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_cmatrix(&self) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&x| C64::new(x, 0.0)).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    /// Determinant by LU with partial pivoting.
    pub fn det(&self) -> f64 {
        assert!(self.rows == self.cols);
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut det = 1.0;
        for k in 0..n {
            let (mut piv, mut best) = (k, a[k * n + k].abs());
            for i in k + 1..n {
                if a[i * n + k].abs() > best {
                    piv = i;
                    best = a[i * n + k].abs();
                }
            }
            if best == 0.0 {
                return 0.0;
            }
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                det = -det;
            }
            det *= a[k * n + k];
            for i in k + 1..n {
                let f = a[i * n + k] / a[k * n + k];
                for j in k..n {
                    a[i * n + j] -= f * a[k * n + j];
                }
            }
        }
        det
    }

    /// Smallest/largest singular value ratio (1.0 for the empty matrix).
    pub fn sv_ratio(&self) -> f64 {
        let s = svd(&self.to_cmatrix()).sigma;
        match (s.first(), s.last()) {
            (Some(&hi), Some(&lo)) if hi > 0.0 => lo / hi,
            _ => 0.0,
        }
    }

    /// Rank-relative invertibility check for verdict matrices.
    pub fn invertible(&self, rel_tol: f64) -> bool {
        self.rows == self.cols && self.rows > 0 && self.sv_ratio() > rel_tol
    }
}

impl std::ops::Index<(usize, usize)> for RMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.entries[i * self.cols + j]
    }
}

// -- Jacobi kernels ---------------------------------------------------------

/// 2x2 rotation parameters (c, s, phase) that diagonalise the Hermitian block
/// [[app, apq], [conj(apq), aqq]] via U = diag(1, conj(phase)) * [[c, s], [-s, c]]:
/// column updates are p' = c p - s conj(phase) q and q' = s p + c conj(phase) q.
fn jacobi_rotation(app: f64, aqq: f64, apq: C64) -> (f64, f64, C64) {
    let b = apq.norm();
    let phase = apq / b;
    let zeta = (aqq - app) / (2.0 * b);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
    } else {
        -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, t * c, phase)
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvector columns. Fails if the input deviates from Hermitian by more
/// than `hermitian_tol` in Frobenius norm.
pub fn hermitian_eigen(m: &CMatrix, hermitian_tol: f64) -> Result<(Vec<f64>, CMatrix), NumericsError> {
    if !m.is_square() {
        return Err(NumericsError::Shape(format!("{}x{} is not square", m.rows, m.cols)));
    }
    let dev = m.hermitian_deviation();
    if dev > hermitian_tol {
        return Err(NumericsError::NotHermitian { deviation: dev });
    }
    let n = m.rows;
    // Symmetrise so roundoff in the input cannot bias the iteration.
    let mut h = m.add(&m.adjoint()).scale(C64::new(0.5, 0.0));
    let mut v = CMatrix::identity(n);
    let scale = h.frobenius_norm().max(f64::MIN_POSITIVE);
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off += h[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = h[(p, q)];
                if apq.norm() <= 1e-300 {
                    continue;
                }
                let (c, s, phase) = jacobi_rotation(h[(p, p)].re, h[(q, q)].re, apq);
                let (cp, ph) = (C64::new(c, 0.0), phase.conj());
                // Right update h <- h U: columns p and q of h and v.
                for i in 0..n {
                    let (hp, hq) = (h[(i, p)], h[(i, q)]);
                    h[(i, p)] = cp * hp - s * ph * hq;
                    h[(i, q)] = s * hp + cp * ph * hq;
                    let (vp, vq) = (v[(i, p)], v[(i, q)]);
                    v[(i, p)] = cp * vp - s * ph * vq;
                    v[(i, q)] = s * vp + cp * ph * vq;
                }
                // Left update h <- U^H h: rows p and q of h.
                for j in 0..n {
                    let (hp, hq) = (h[(p, j)], h[(q, j)]);
                    h[(p, j)] = cp * hp - s * phase * hq;
                    h[(q, j)] = s * hp + cp * phase * hq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| h[(i, i)].re).collect();
    order.sort_by(|&a, &b| diag[a].partial_cmp(&diag[b]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok((eigenvalues, vectors))
}

/// Thin singular value decomposition `a = u * diag(sigma) * v^*`.
pub struct Svd {
    pub u: CMatrix,
    /// Singular values, descending.
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

/// One-sided Jacobi SVD; high relative accuracy for small singular values.
pub fn svd(a: &CMatrix) -> Svd {
    if a.rows < a.cols {
        let t = svd(&a.adjoint());
        return Svd { u: t.v, sigma: t.sigma, v: t.u };
    }
    let (m, n) = (a.rows, a.cols);
    let mut w = a.clone();
    let mut v = CMatrix::identity(n);
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = C64::new(0.0, 0.0);
                for i in 0..m {
                    app += w[(i, p)].norm_sqr();
                    aqq += w[(i, q)].norm_sqr();
                    apq += w[(i, p)].conj() * w[(i, q)];
                }
                if apq.norm() <= 1e-15 * (app * aqq).sqrt() || apq.norm() <= 1e-300 {
                    continue;
                }
                rotated = true;
                let (c, s, phase) = jacobi_rotation(app, aqq, apq);
                let (cp, ph) = (C64::new(c, 0.0), phase.conj());
                for i in 0..m {
                    let (wp, wq) = (w[(i, p)], w[(i, q)]);
                    w[(i, p)] = cp * wp - s * ph * wq;
                    w[(i, q)] = s * wp + cp * ph * wq;
                }
                for i in 0..n {
                    let (vp, vq) = (v[(i, p)], v[(i, q)]);
                    v[(i, p)] = cp * vp - s * ph * vq;
                    v[(i, q)] = s * vp + cp * ph * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut norms: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| w[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).unwrap());
    norms = order.iter().map(|&j| norms[j]).collect();
    let u = CMatrix::from_fn(m, n, |i, j| {
        let col = order[j];
        if norms[j] > 0.0 {
            w[(i, col)] / norms[j]
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let vv = CMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Svd { u, sigma: norms, v: vv }
}

/// Largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    svd(m).sigma.first().copied().unwrap_or(0.0)
}

/// Number of singular values above `tol * sigma_max`; the zero matrix has rank 0.
pub fn rank_with_tol(m: &CMatrix, tol: f64) -> usize {
    let s = svd(m).sigma;
    let smax = s.first().copied().unwrap_or(0.0);
    s.iter().filter(|&&x| x > tol * smax && x > 0.0).count()
}

/// Solve `m x = rhs` through the SVD; `Singular` below the relative cutoff.
pub fn solve_linear(m: &CMatrix, rhs: &CMatrix, rank_tol: f64) -> Result<CMatrix, NumericsError> {
    if !m.is_square() {
        return Err(NumericsError::Shape(format!("{}x{} is not square", m.rows, m.cols)));
    }
    if m.rows != rhs.rows {
        return Err(NumericsError::Shape("rhs row count mismatch".into()));
    }
    let dec = svd(m);
    let smax = dec.sigma.first().copied().unwrap_or(0.0);
    let smin = dec.sigma.last().copied().unwrap_or(0.0);
    if smax == 0.0 || smin <= rank_tol * smax {
        return Err(NumericsError::Singular { ratio: if smax > 0.0 { smin / smax } else { 0.0 } });
    }
    // x = v * diag(1/sigma) * u^H * rhs
    let ut_rhs = dec.u.adjoint().mul(rhs);
    let scaled = CMatrix::from_fn(ut_rhs.rows(), ut_rhs.cols(), |i, j| ut_rhs[(i, j)] / dec.sigma[i]);
    Ok(dec.v.mul(&scaled))
}

/// Inverse of a square matrix (SVD-backed).
pub fn inverse(m: &CMatrix, rank_tol: f64) -> Result<CMatrix, NumericsError> {
    solve_linear(m, &CMatrix::identity(m.rows()), rank_tol)
}

/// Orthonormal basis of the (right) nullspace of a real matrix.
pub fn real_nullspace(m: &RMatrix, tol: f64) -> Vec<Vec<f64>> {
    // Pad wide matrices with zero rows so the SVD carries a full V factor.
    let padded = if m.rows() < m.cols() {
        let mut p = RMatrix::zeros(m.cols(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                p[(i, j)] = m[(i, j)];
            }
        }
        p
    } else {
        m.clone()
    };
    let dec = svd(&padded.to_cmatrix());
    let smax = dec.sigma.first().copied().unwrap_or(0.0);
    let n = m.cols();
    let mut basis = Vec::new();
    for j in 0..n {
        let sj = dec.sigma.get(j).copied().unwrap_or(0.0);
        if sj <= tol * smax {
            basis.push((0..n).map(|i| dec.v[(i, j)].re).collect());
        }
    }
    basis
}

/// Rank over the reals of a set of real row vectors.
pub fn real_rank(rows: &[Vec<f64>], tol: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rank_with_tol(&RMatrix::from_rows(rows).to_cmatrix(), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn random_cmatrix(rng: &mut impl Rng, rows: usize, cols: usize) -> CMatrix {
        CMatrix::from_fn(rows, cols, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
    }

    #[test]
    fn spectral_norm_identity_and_zero() {
        assert_eq!(spectral_norm(&CMatrix::identity(3)), 1.0);
        assert_eq!(spectral_norm(&CMatrix::zeros(2, 2)), 0.0);
    }

    #[test]
    fn spectral_norm_of_diagonal_is_max_abs_entry() {
        let gamma = (21f64.sqrt() - 5.0) / 2.0;
        let m = CMatrix::diag(&[c(-0.5, 0.0), c(0.0, 0.0), c(gamma, 0.0)]);
        assert!((spectral_norm(&m) - 0.5).abs() < 1e-14);
    }

    #[test]
    fn hermitian_eigen_simple_cases() {
        let (vals, _) = hermitian_eigen(&CMatrix::diag(&[c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]), 1e-12).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14 && (vals[1] - 1.0).abs() < 1e-14 && (vals[2] - 1.0).abs() < 1e-14);

        let m = CMatrix::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]);
        let (vals, _) = hermitian_eigen(&m, 1e-12).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14 && (vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn hermitian_eigen_rejects_non_hermitian() {
        let m = CMatrix::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(0.0, 0.0), c(0.0, 0.0)]]);
        assert!(matches!(hermitian_eigen(&m, 1e-12), Err(NumericsError::NotHermitian { .. })));
    }

    #[test]
    fn eigen_reconstruction_residual() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = random_cmatrix(&mut rng, 5, 5);
            let h = a.add(&a.adjoint());
            let (vals, vecs) = hermitian_eigen(&h, 1e-9).unwrap();
            let lambda = CMatrix::diag(&vals.iter().map(|&x| c(x, 0.0)).collect::<Vec<_>>());
            let recon = vecs.mul(&lambda).mul(&vecs.adjoint());
            assert!(recon.sub(&h).frobenius_norm() <= 1e-9 * h.frobenius_norm().max(1.0));
            // eigenvector orthonormality
            let gram = vecs.adjoint().mul(&vecs);
            assert!(gram.sub(&CMatrix::identity(5)).max_abs() < 1e-10);
            // residual per pair
            for k in 0..5 {
                let v = vecs.col_vec(k);
                let hv = h.mul_vec(&v);
                let err: f64 = hv.iter().zip(&v).map(|(a, b)| (a - b * vals[k]).norm()).sum();
                assert!(err < 1e-10 * h.frobenius_norm().max(1.0));
            }
        }
    }

    #[test]
    fn svd_factorisation_holds() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for &(r, cnum) in &[(4usize, 4usize), (5, 3), (3, 5)] {
            let a = random_cmatrix(&mut rng, r, cnum);
            let dec = svd(&a);
            let sig = CMatrix::diag(&dec.sigma.iter().map(|&x| c(x, 0.0)).collect::<Vec<_>>());
            let recon = dec.u.mul(&sig).mul(&dec.v.adjoint());
            assert!(recon.sub(&a).max_abs() < 1e-12 * a.max_abs().max(1.0));
            let k = r.min(cnum);
            let gram = dec.v.adjoint().mul(&dec.v);
            assert!(gram.sub(&CMatrix::identity(k.max(dec.v.cols()))).max_abs() < 1e-11);
        }
    }

    #[test]
    fn submultiplicativity_on_random_samples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..25 {
            let a = random_cmatrix(&mut rng, 5, 5);
            let b = random_cmatrix(&mut rng, 5, 5);
            let lhs = spectral_norm(&a.mul(&b));
            let rhs = spectral_norm(&a) * spectral_norm(&b);
            assert!(lhs <= rhs * (1.0 + 1e-12));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_with_tol(&CMatrix::identity(4), 1e-9), 4);
        let v = [c(1.0, 0.5), c(-2.0, 0.0), c(0.0, 1.0)];
        let outer = CMatrix::from_fn(3, 3, |i, j| v[i] * v[j].conj());
        assert_eq!(rank_with_tol(&outer, 1e-9), 1);
        assert_eq!(rank_with_tol(&CMatrix::zeros(3, 2), 1e-9), 0);
    }

    #[test]
    fn rank_is_unitarily_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for _ in 0..10 {
            let a = random_cmatrix(&mut rng, 4, 4);
            let g = random_cmatrix(&mut rng, 4, 4);
            let h = g.add(&g.adjoint());
            let (_, q) = hermitian_eigen(&h, 1e-9).unwrap(); // unitary
            let r0 = rank_with_tol(&a, 1e-9);
            assert_eq!(rank_with_tol(&q.mul(&a), 1e-9), r0);
            assert_eq!(rank_with_tol(&a.mul(&q), 1e-9), r0);
        }
    }

    #[test]
    fn solve_examples() {
        let rhs = CMatrix::column(&[c(2.0, 1.0), c(0.0, -1.0), c(3.0, 0.0)]);
        let x = solve_linear(&CMatrix::identity(3), &rhs, 1e-9).unwrap();
        assert!(x.sub(&rhs).max_abs() < 1e-14);

        let m = CMatrix::diag(&[c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]);
        let e3 = CMatrix::column(&[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let x = solve_linear(&m, &e3, 1e-9).unwrap();
        assert!((x[(2, 0)] + c(1.0, 0.0)).norm() < 1e-14);

        let m = CMatrix::diag(&[c(2.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)]);
        let rhs = CMatrix::column(&[c(2.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)]);
        let x = solve_linear(&m, &rhs, 1e-9).unwrap();
        for i in 0..3 {
            assert!((x[(i, 0)] - c(1.0, 0.0)).norm() < 1e-14);
        }

        let singular = CMatrix::diag(&[c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(solve_linear(&singular, &CMatrix::identity(2), 1e-9), Err(NumericsError::Singular { .. })));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(real_nullspace(&RMatrix::zeros(2, 3), 1e-9).len(), 3);
        let id = RMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, 1.0]]);
        assert_eq!(real_nullspace(&id, 1e-9).len(), 0);
        let m = RMatrix::from_rows(&[vec![1.0, -1.0]]);
        let basis = real_nullspace(&m, 1e-9);
        assert_eq!(basis.len(), 1);
        let b = &basis[0];
        let s = 0.5f64.sqrt();
        assert!((b[0].abs() - s).abs() < 1e-12 && (b[0] - b[1]).abs() < 1e-12);
    }

    #[test]
    fn tolerance_config_validation() {
        assert!(ToleranceConfig::default().validate().is_ok());
        let mut bad = ToleranceConfig::default();
        bad.max_iterations = 0;
        assert!(bad.validate().is_err());
    }
}
