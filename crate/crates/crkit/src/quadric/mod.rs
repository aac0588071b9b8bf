//! Quadric model analysis: the matrix equation PX^2 + AX + conj(P)^t = 0,
//! its derivative and Stein series, nondegeneracy matrices, the 1-jet
//! Jacobian criterion, and the minimality / pseudoconvexity searches.

mod analysis;
mod solve;

pub use analysis::{
    d_nondegenerate, orbit_span, stationary_minimal, strong_levi_nondegenerate,
    strongly_pseudoconvex_search, DNondegeneracy, OrbitSpan,
};
pub use solve::{da_matrix, diff_x_re_a, jet1_middle, jet_jacobian_block, solve_small_x, stein_k};

use crate::numerics::{rank_with_tol, C64, CMatrix};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadricError {
    #[error("matrix A = sum (b_j - 2 Re a_j) A_j is singular")]
    SingularA,
    #[error("contraction margin violated: 2*|A^-1 P|*|A^-1 tPbar| = {margin:.6} >= 1/2")]
    NoContraction { margin: f64 },
    #[error("small solution has norm {norm} >= 1")]
    NormTooLarge { norm: f64 },
    #[error("series diverged: tail above tolerance after {terms} terms")]
    Diverged { terms: usize },
    #[error("solver stalled at residual {residual:e}")]
    NoConvergence { residual: f64 },
    #[error("matrix {index} is not Hermitian at entry ({row}, {col})")]
    NotHermitian { index: usize, row: usize, col: usize },
    #[error("shape error: {0}")]
    Shape(String),
}

/// Quadric model: d Hermitian n-by-n matrices A_1..A_d defining
/// Re w_j = tconj(z) A_j z.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricModel {
    n: usize,
    d: usize,
    matrices: Vec<CMatrix>,
    independent: bool,
}

impl QuadricModel {
    /// Validate and build. Hermitian deviation beyond 1e-12 on any entry is
    /// an error; R-linear dependence of the A_j only clears a flag.
    pub fn new(n: usize, matrices: Vec<CMatrix>) -> Result<Self, QuadricError> {
        let d = matrices.len();
        if d == 0 {
            return Err(QuadricError::Shape("need at least one matrix".into()));
        }
        for (idx, m) in matrices.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(QuadricError::Shape(format!(
                    "matrix {idx} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            for i in 0..n {
                for j in 0..n {
                    if (m[(i, j)] - m[(j, i)].conj()).norm() > 1e-12 {
                        return Err(QuadricError::NotHermitian { index: idx, row: i, col: j });
                    }
                }
            }
        }
        // Stack real/imaginary vectorisations to test R-linear independence.
        let rows: Vec<Vec<C64>> = matrices
            .iter()
            .map(|m| {
                m.entries()
                    .iter()
                    .flat_map(|z| [C64::new(z.re, 0.0), C64::new(z.im, 0.0)])
                    .collect()
            })
            .collect();
        let independent = rank_with_tol(&CMatrix::from_rows(&rows), 1e-9) == d;
        Ok(QuadricModel { n, d, matrices, independent })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, j: usize) -> &CMatrix {
        &self.matrices[j]
    }

    /// False when the A_j are R-linearly dependent (a warning, not an error).
    pub fn independent(&self) -> bool {
        self.independent
    }

    /// Linear combination sum_j c_j A_j.
    pub fn combine(&self, coeffs: &[C64]) -> CMatrix {
        assert_eq!(coeffs.len(), self.d);
        let mut acc = CMatrix::zeros(self.n, self.n);
        for (c, m) in coeffs.iter().zip(&self.matrices) {
            acc = acc.add(&m.scale(*c));
        }
        acc
    }

    pub fn combine_real(&self, coeffs: &[f64]) -> CMatrix {
        let c: Vec<C64> = coeffs.iter().map(|&x| C64::new(x, 0.0)).collect();
        self.combine(&c)
    }

    pub fn to_json(&self) -> Value {
        let mats: Vec<Value> = self
            .matrices
            .iter()
            .map(|m| {
                let rows: Vec<Value> = (0..m.rows())
                    .map(|i| {
                        let row: Vec<Value> =
                            (0..m.cols()).map(|j| json!([m[(i, j)].re, m[(i, j)].im])).collect();
                        Value::Array(row)
                    })
                    .collect();
                Value::Array(rows)
            })
            .collect();
        json!({ "kind": "quadric", "n": self.n, "d": self.d, "matrices": mats })
    }

    pub fn from_json(v: &Value) -> Result<Self, QuadricError> {
        let obj = v.as_object().ok_or_else(|| QuadricError::Shape("quadric must be an object".into()))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| QuadricError::Shape("quadric needs \"n\"".into()))? as usize;
        let mats_v = obj
            .get("matrices")
            .and_then(Value::as_array)
            .ok_or_else(|| QuadricError::Shape("quadric needs \"matrices\"".into()))?;
        if let Some(d) = obj.get("d").and_then(Value::as_u64) {
            if d as usize != mats_v.len() {
                return Err(QuadricError::Shape(format!(
                    "declared d = {d} but {} matrices given",
                    mats_v.len()
                )));
            }
        }
        let mut matrices = Vec::new();
        for mv in mats_v {
            let rows_v = mv.as_array().ok_or_else(|| QuadricError::Shape("matrix must be an array of rows".into()))?;
            let mut rows = Vec::new();
            for rv in rows_v {
                let row_v = rv.as_array().ok_or_else(|| QuadricError::Shape("row must be an array".into()))?;
                let mut row = Vec::new();
                for ev in row_v {
                    let pair = ev.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                        QuadricError::Shape("entry must be a [re, im] pair".into())
                    })?;
                    let re = pair[0].as_f64().ok_or_else(|| QuadricError::Shape("bad re".into()))?;
                    let im = pair[1].as_f64().ok_or_else(|| QuadricError::Shape("bad im".into()))?;
                    row.push(C64::new(re, im));
                }
                rows.push(row);
            }
            matrices.push(CMatrix::from_rows(&rows));
        }
        QuadricModel::new(n, matrices)
    }
}

/// Parameters (b, a, V) selecting a lift and a direction.
#[derive(Debug, Clone, PartialEq)]
pub struct JetParameters {
    pub b: Vec<f64>,
    pub a: Vec<C64>,
    pub v: Vec<C64>,
}

impl JetParameters {
    pub fn new(b: Vec<f64>, a: Vec<C64>, v: Vec<C64>) -> Self {
        JetParameters { b, a, v }
    }

    /// P = sum_j a_j A_j.
    pub fn p_matrix(&self, model: &QuadricModel) -> CMatrix {
        model.combine(&self.a)
    }

    /// A = sum_j (b_j - a_j - conj(a_j)) A_j.
    pub fn a_matrix(&self, model: &QuadricModel) -> CMatrix {
        let coeffs: Vec<C64> = self
            .b
            .iter()
            .zip(&self.a)
            .map(|(&bj, aj)| C64::new(bj - 2.0 * aj.re, 0.0))
            .collect();
        model.combine(&coeffs)
    }
}

/// Converged small solution of PX^2 + AX + tconj(P) = 0.
#[derive(Debug, Clone)]
pub struct SmallSolution {
    pub x: CMatrix,
    pub residual: f64,
    pub iterations: usize,
    pub norm: f64,
}
