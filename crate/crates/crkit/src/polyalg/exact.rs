//! Exact linear algebra: fraction-free Gaussian elimination over the
//! integers for rational kernel computations, plus small Gaussian-rational
//! matrix utilities (inverse, characteristic polynomial) and univariate
//! polynomial gcd used by the rotation classifier.

use super::gaussian::{GaussianRational, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense matrix over the rationals, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }
}

/// Clear denominators row by row, producing an integer matrix.
fn integerize(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..m.cols {
                let d = m.get(i, j).denom();
                lcm = num_integer::lcm(lcm, d.clone());
            }
            (0..m.cols)
                .map(|j| {
                    let e = m.get(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect()
        })
        .collect()
}

/// Row echelon form by Bareiss one-step fraction-free elimination.
/// Returns the echelon matrix (rational, from exact integer arithmetic)
/// together with the pivot column of each pivot row.
fn bareiss_echelon(m: &RatMatrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a = integerize(m);
    let (rows, cols) = (a.len(), m.cols);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            for j in 0..cols {
                if j == c {
                    continue;
                }
                // Bareiss one-step update; the division by the previous
                // pivot is exact (entries stay minors of the input).
                row[j] = (&pivot_row[c] * &row[j] - &row[c] * &pivot_row[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Rank of a rational matrix, exactly.
pub fn rational_rank(m: &RatMatrix) -> usize {
    bareiss_echelon(m).1.len()
}

/// Exact basis of the right kernel {x : m x = 0}.
///
/// One vector per free column, normalised so the free coordinate is 1.
pub fn rational_kernel(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let (ech, pivots) = bareiss_echelon(m);
    let cols = m.cols;
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = Some(row);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut x = vec![Rat::zero(); cols];
        x[free] = Rat::one();
        // Back-substitute pivot rows from the bottom up.
        for row in (0..pivots.len()).rev() {
            let pc = pivots[row];
            let mut s = Rat::zero();
            for j in pc + 1..cols {
                if !ech[row][j].is_zero() && !x[j].is_zero() {
                    s += Rat::from_integer(ech[row][j].clone()) * &x[j];
                }
            }
            if !s.is_zero() {
                x[pc] = -s / Rat::from_integer(ech[row][pc].clone());
            }
        }
        basis.push(x);
    }
    basis
}

// -- Gaussian-rational matrices ----------------------------------------------

/// Small dense matrix over Gaussian rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct GMatrix {
    n: usize,
    entries: Vec<GaussianRational>,
}

impl GMatrix {
    pub fn zeros(n: usize) -> Self {
        GMatrix { n, entries: vec![GaussianRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> GaussianRational) -> Self {
        let mut m = GMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, o: &GMatrix) -> GMatrix {
        GMatrix { n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &GMatrix) -> GMatrix {
        GMatrix { n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &GaussianRational) -> GMatrix {
        GMatrix { n: self.n, entries: self.entries.iter().map(|a| a * s).collect() }
    }

    pub fn mul(&self, o: &GMatrix) -> GMatrix {
        let n = self.n;
        let mut out = GMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + &(a * o.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> GaussianRational {
        let mut t = GaussianRational::zero();
        for i in 0..self.n {
            t = &t + self.get(i, i);
        }
        t
    }

    /// Exact inverse by Gauss-Jordan; None when singular.
    pub fn inverse(&self) -> Option<GMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = GMatrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a.get(i, c).is_zero())?;
            if p != c {
                for j in 0..n {
                    let (x, y) = (a.get(c, j).clone(), a.get(p, j).clone());
                    a.set(c, j, y);
                    a.set(p, j, x);
                    let (x, y) = (inv.get(c, j).clone(), inv.get(p, j).clone());
                    inv.set(c, j, y);
                    inv.set(p, j, x);
                }
            }
            let d = a.get(c, c).inverse().unwrap();
            for j in 0..n {
                a.set(c, j, a.get(c, j) * &d);
                inv.set(c, j, inv.get(c, j) * &d);
            }
            for i in 0..n {
                if i == c || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..n {
                    let v = a.get(i, j) - &(&f * a.get(c, j));
                    a.set(i, j, v);
                    let v = inv.get(i, j) - &(&f * inv.get(c, j));
                    inv.set(i, j, v);
                }
            }
        }
        Some(inv)
    }

    pub fn to_cmatrix(&self) -> crate::numerics::CMatrix {
        crate::numerics::CMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j).to_c64())
    }
}

// -- Univariate polynomials over Gaussian rationals --------------------------
// Coefficient vectors are low-to-high degree with no trailing zeros.

pub type GPoly = Vec<GaussianRational>;

pub fn gpoly_trim(mut p: GPoly) -> GPoly {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

pub fn gpoly_degree(p: &GPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn gpoly_derivative(p: &GPoly) -> GPoly {
    let mut out = Vec::new();
    for (k, c) in p.iter().enumerate().skip(1) {
        out.push(c * &GaussianRational::from_int(k as i64));
    }
    gpoly_trim(out)
}

/// Remainder of a by b (b nonzero), monic-normalised classical division.
pub fn gpoly_rem(a: &GPoly, b: &GPoly) -> GPoly {
    let mut r = a.clone();
    let db = gpoly_degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    while let Some(dr) = gpoly_degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &lead;
        let shift = dr - db;
        for k in 0..=db {
            let v = &r[shift + k] - &(&f * &b[k]);
            r[shift + k] = v;
        }
        r = gpoly_trim(r);
    }
    r
}

/// Quotient of exact division a / b (panics if not exact).
pub fn gpoly_div_exact(a: &GPoly, b: &GPoly) -> GPoly {
    let mut r = a.clone();
    let db = gpoly_degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut q = vec![GaussianRational::zero(); a.len().saturating_sub(db)];
    while let Some(dr) = gpoly_degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &lead;
        let shift = dr - db;
        q[shift] = f.clone();
        for k in 0..=db {
            let v = &r[shift + k] - &(&f * &b[k]);
            r[shift + k] = v;
        }
        r = gpoly_trim(r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    gpoly_trim(q)
}

/// Monic gcd via the Euclidean algorithm.
pub fn gpoly_gcd(a: &GPoly, b: &GPoly) -> GPoly {
    let mut x = gpoly_trim(a.clone());
    let mut y = gpoly_trim(b.clone());
    while !y.is_empty() {
        let r = gpoly_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = gpoly_degree(&x) {
        let lead = x[d].inverse().unwrap();
        x = x.iter().map(|c| c * &lead).collect();
    }
    x
}

/// Evaluate a polynomial at a matrix argument.
pub fn gpoly_eval_matrix(p: &GPoly, m: &GMatrix) -> GMatrix {
    let n = m.n();
    let mut acc = GMatrix::zeros(n);
    for c in p.iter().rev() {
        acc = acc.mul(m);
        acc = acc.add(&GMatrix::identity(n).scale(c));
    }
    acc
}

/// Characteristic polynomial det(xI - m) by Faddeev-LeVerrier.
/// Returned low-to-high; leading coefficient 1.
pub fn charpoly(m: &GMatrix) -> GPoly {
    let n = m.n();
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let mut mk = GMatrix::identity(n);
    for k in 1..=n {
        mk = m.mul(&mk);
        let c = -&(&mk.trace() / &GaussianRational::from_int(k as i64));
        coeffs[n - k] = c.clone();
        mk = mk.add(&GMatrix::identity(n).scale(&c));
    }
    coeffs
}
