//! Sparse polynomials in (z_1..z_n, conj(z_1)..conj(z_n)) over Gaussian
//! rationals, keyed by bidegree pairs (alpha, beta).

use super::gaussian::GaussianRational;
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::f64::consts::TAU;

/// A formal variable: z_j or its conjugate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Z(usize),
    ZBar(usize),
}

/// Mixed polynomial in z and conj(z) with exact coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermPoly {
    n: usize,
    terms: BTreeMap<(Vec<u32>, Vec<u32>), GaussianRational>,
}

impl HermPoly {
    pub fn zero(n: usize) -> Self {
        HermPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: GaussianRational) -> Self {
        let mut p = HermPoly::zero(n);
        p.add_term(vec![0; n], vec![0; n], c);
        p
    }

    pub fn var_z(n: usize, j: usize) -> Self {
        let mut a = vec![0u32; n];
        a[j] = 1;
        let mut p = HermPoly::zero(n);
        p.add_term(a, vec![0; n], GaussianRational::one());
        p
    }

    pub fn var_zbar(n: usize, j: usize) -> Self {
        let mut b = vec![0u32; n];
        b[j] = 1;
        let mut p = HermPoly::zero(n);
        p.add_term(vec![0; n], b, GaussianRational::one());
        p
    }

    pub fn monomial(n: usize, alpha: Vec<u32>, beta: Vec<u32>, c: GaussianRational) -> Self {
        let mut p = HermPoly::zero(n);
        p.add_term(alpha, beta, c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<u32>, Vec<u32>), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &[u32], beta: &[u32]) -> GaussianRational {
        self.terms
            .get(&(alpha.to_vec(), beta.to_vec()))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, alpha: Vec<u32>, beta: Vec<u32>, c: GaussianRational) {
        use std::collections::btree_map::Entry;
        assert_eq!(alpha.len(), self.n);
        assert_eq!(beta.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry((alpha, beta)) {
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &HermPoly) -> HermPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> HermPoly {
        HermPoly { n: self.n, terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &HermPoly) -> HermPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &GaussianRational) -> HermPoly {
        if s.is_zero() {
            return HermPoly::zero(self.n);
        }
        HermPoly { n: self.n, terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect() }
    }

    /// Exact product.
    pub fn multiply(&self, other: &HermPoly) -> HermPoly {
        assert_eq!(self.n, other.n);
        let mut out = HermPoly::zero(self.n);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let a: Vec<u32> = a1.iter().zip(a2).map(|(x, y)| x + y).collect();
                let b: Vec<u32> = b1.iter().zip(b2).map(|(x, y)| x + y).collect();
                out.add_term(a, b, c1 * c2);
            }
        }
        out
    }

    /// Complex conjugate: swaps alpha and beta and conjugates coefficients.
    pub fn conj(&self) -> HermPoly {
        HermPoly {
            n: self.n,
            terms: self.terms.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.conj())).collect(),
        }
    }

    /// (p + conj(p)) / 2.
    pub fn real_part(&self) -> HermPoly {
        self.add(&self.conj()).scale(&GaussianRational::from_parts(1, 2, 0, 1))
    }

    /// Exact formal partial derivative.
    pub fn differentiate(&self, v: Var) -> HermPoly {
        let mut out = HermPoly::zero(self.n);
        for ((a, b), c) in &self.terms {
            match v {
                Var::Z(j) => {
                    if a[j] > 0 {
                        let mut a2 = a.clone();
                        a2[j] -= 1;
                        out.add_term(a2, b.clone(), c * &GaussianRational::from_int(a[j] as i64));
                    }
                }
                Var::ZBar(j) => {
                    if b[j] > 0 {
                        let mut b2 = b.clone();
                        b2[j] -= 1;
                        out.add_term(a.clone(), b2, c * &GaussianRational::from_int(b[j] as i64));
                    }
                }
            }
        }
        out
    }

    /// Numeric evaluation with conj(z) taken as the conjugate of `z`.
    pub fn evaluate(&self, z: &[Complex64]) -> Complex64 {
        assert_eq!(z.len(), self.n);
        let mut acc = Complex64::new(0.0, 0.0);
        for ((a, b), c) in &self.terms {
            let mut t = c.to_c64();
            for j in 0..self.n {
                if a[j] > 0 {
                    t *= z[j].powu(a[j]);
                }
                if b[j] > 0 {
                    t *= z[j].conj().powu(b[j]);
                }
            }
            acc += t;
        }
        acc
    }

    /// True iff coeff(alpha, beta) = conj(coeff(beta, alpha)) for all terms.
    pub fn is_real_valued(&self) -> bool {
        self.terms.iter().all(|((a, b), c)| {
            self.terms
                .get(&(b.clone(), a.clone()))
                .map(|d| *c == d.conj())
                .unwrap_or(false)
        })
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|(a, b)| a.iter().sum::<u32>() + b.iter().sum::<u32>())
            .max()
    }

    pub fn is_homogeneous_of_degree(&self, m: u32) -> bool {
        self.terms
            .keys()
            .all(|(a, b)| a.iter().sum::<u32>() + b.iter().sum::<u32>() == m)
    }

    /// True iff every term has a bidegree different from (p, q).
    pub fn is_bihomogeneous_of(&self, p: u32, q: u32) -> bool {
        self.terms
            .keys()
            .all(|(a, b)| a.iter().sum::<u32>() == p && b.iter().sum::<u32>() == q)
    }

    /// A term is pluriharmonic when it depends on z only or on conj(z) only.
    pub fn pluriharmonic_term(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        self.terms
            .keys()
            .find(|(a, b)| a.iter().all(|&x| x == 0) || b.iter().all(|&x| x == 0))
            .cloned()
    }

    pub fn max_coeff_abs(&self) -> f64 {
        self.terms.values().map(|c| c.to_c64().norm()).fold(0.0, f64::max)
    }

    /// Trapezoidal average of lambda -> p(lambda z0) over the circle
    /// |lambda| = radius, with `quadrature_points` equispaced nodes.
    ///
    /// Exact (up to roundoff) once `quadrature_points` exceeds the total
    /// degree spread of the restricted polynomial.
    pub fn circle_mean(&self, z0: &[Complex64], radius: f64, quadrature_points: usize) -> Complex64 {
        assert!(radius > 0.0 && quadrature_points >= 2);
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..quadrature_points {
            let theta = TAU * (k as f64) / (quadrature_points as f64);
            let lambda = Complex64::from_polar(radius, theta);
            let zs: Vec<Complex64> = z0.iter().map(|&z| lambda * z).collect();
            acc += self.evaluate(&zs);
        }
        acc / (quadrature_points as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    #[test]
    fn multiply_examples() {
        let n = 1;
        let z = HermPoly::var_z(n, 0);
        let zb = HermPoly::var_zbar(n, 0);
        let p = z.multiply(&zb);
        assert_eq!(p.coeff(&[1], &[1]), g(1));
        assert_eq!(p.num_terms(), 1);
        let q = z.add(&zb).multiply(&HermPoly::zero(n));
        assert!(q.is_zero());
    }

    #[test]
    fn differentiate_examples() {
        let n = 2;
        // z1^2 zbar2
        let p = HermPoly::monomial(n, vec![2, 0], vec![0, 1], g(1));
        let dz1 = p.differentiate(Var::Z(0));
        assert_eq!(dz1.coeff(&[1, 0], &[0, 1]), g(2));
        assert!(HermPoly::var_z(n, 0).differentiate(Var::ZBar(0)).is_zero());
        // Q = z1 zbar2 + z2 zbar1, dQ/dz1 = zbar2
        let q = HermPoly::monomial(n, vec![1, 0], vec![0, 1], g(1))
            .add(&HermPoly::monomial(n, vec![0, 1], vec![1, 0], g(1)));
        assert_eq!(q.differentiate(Var::Z(0)), HermPoly::var_zbar(n, 1));
    }

    #[test]
    fn realness_examples() {
        let n = 2;
        assert!(HermPoly::monomial(1, vec![1], vec![1], g(1)).is_real_valued());
        assert!(!HermPoly::monomial(n, vec![1, 0], vec![0, 1], g(1)).is_real_valued());
        // i z1 zbar2 - i z2 zbar1 is real-valued
        let p = HermPoly::monomial(n, vec![1, 0], vec![0, 1], GaussianRational::i())
            .add(&HermPoly::monomial(n, vec![0, 1], vec![1, 0], -&GaussianRational::i()));
        assert!(p.is_real_valued());
    }

    #[test]
    fn evaluate_examples() {
        let q = HermPoly::monomial(1, vec![1], vec![1], g(1));
        let v = q.evaluate(&[Complex64::new(0.0, 3.0)]);
        assert!((v - Complex64::new(9.0, 0.0)).norm() < 1e-14);

        let n = 2;
        let q = HermPoly::monomial(n, vec![1, 0], vec![0, 1], g(1))
            .add(&HermPoly::monomial(n, vec![0, 1], vec![1, 0], g(1)));
        let v = q.evaluate(&[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)]);
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn circle_mean_examples() {
        let p = HermPoly::monomial(1, vec![1], vec![1], g(1)); // |z|^2
        let m = p.circle_mean(&[Complex64::new(1.0, 0.0)], 1.0, 8);
        assert!((m - Complex64::new(1.0, 0.0)).norm() < 1e-13);

        let p = HermPoly::monomial(1, vec![2], vec![2], g(1)); // |z|^4
        let m = p.circle_mean(&[Complex64::new(2.0, 0.0)], 1.0, 16);
        assert!((m - Complex64::new(16.0, 0.0)).norm() < 1e-12);

        // single term with |alpha| != |beta| averages to zero
        let p = HermPoly::monomial(1, vec![3], vec![1], g(5));
        let m = p.circle_mean(&[Complex64::new(0.7, 0.2)], 1.0, 16);
        assert!(m.norm() < 1e-12);
    }

    #[test]
    fn conj_and_real_part() {
        let p = HermPoly::monomial(1, vec![2], vec![0], GaussianRational::from_parts(0, 1, 1, 1));
        let r = p.real_part();
        assert!(r.is_real_valued());
        assert_eq!(r.coeff(&[2], &[0]), GaussianRational::from_parts(0, 1, 1, 2));
        assert_eq!(r.coeff(&[0], &[2]), GaussianRational::from_parts(0, 1, -1, 2));
    }
}
