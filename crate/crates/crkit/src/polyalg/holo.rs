//! Sparse holomorphic polynomials in z_1..z_n over Gaussian rationals.

use super::gaussian::GaussianRational;
use super::herm::HermPoly;
use num_complex::Complex64;
use std::collections::BTreeMap;

/// Polynomial with no conjugate variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HoloPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, GaussianRational>,
}

impl HoloPoly {
    pub fn zero(n: usize) -> Self {
        HoloPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: GaussianRational) -> Self {
        let mut p = HoloPoly::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn var(n: usize, j: usize) -> Self {
        let mut e = vec![0u32; n];
        e[j] = 1;
        let mut p = HoloPoly::zero(n);
        p.add_term(e, GaussianRational::one());
        p
    }

    pub fn monomial(n: usize, exps: Vec<u32>, c: GaussianRational) -> Self {
        assert_eq!(exps.len(), n);
        let mut p = HoloPoly::zero(n);
        p.add_term(exps, c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> GaussianRational {
        self.terms.get(exps).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: GaussianRational) {
        use std::collections::btree_map::Entry;
        assert_eq!(exps.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    pub fn add(&self, other: &HoloPoly) -> HoloPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> HoloPoly {
        HoloPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &HoloPoly) -> HoloPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &GaussianRational) -> HoloPoly {
        if s.is_zero() {
            return HoloPoly::zero(self.n);
        }
        HoloPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn mul(&self, other: &HoloPoly) -> HoloPoly {
        assert_eq!(self.n, other.n);
        let mut out = HoloPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Formal partial derivative with respect to z_j.
    pub fn differentiate(&self, j: usize) -> HoloPoly {
        let mut out = HoloPoly::zero(self.n);
        for (e, c) in &self.terms {
            if e[j] > 0 {
                let mut e2 = e.clone();
                e2[j] -= 1;
                out.add_term(e2, c * &GaussianRational::from_int(e[j] as i64));
            }
        }
        out
    }

    pub fn evaluate(&self, z: &[Complex64]) -> Complex64 {
        assert_eq!(z.len(), self.n);
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = c.to_c64();
            for (j, &p) in e.iter().enumerate() {
                t *= z[j].powu(p);
            }
            acc += t;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// View as a mixed polynomial (all conjugate exponents zero).
    pub fn to_herm(&self) -> HermPoly {
        let mut p = HermPoly::zero(self.n);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), vec![0; self.n], c.clone());
        }
        p
    }

    /// The conjugate polynomial, a purely anti-holomorphic mixed polynomial.
    pub fn conj_to_herm(&self) -> HermPoly {
        let mut p = HermPoly::zero(self.n);
        for (e, c) in &self.terms {
            p.add_term(vec![0; self.n], e.clone(), c.conj());
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    #[test]
    fn arithmetic_and_degree() {
        let n = 2;
        let z1 = HoloPoly::var(n, 0);
        let z2 = HoloPoly::var(n, 1);
        let p = z1.mul(&z1).sub(&z2.scale(&g(3))); // z1^2 - 3 z2
        assert_eq!(p.total_degree(), Some(2));
        assert!(!p.is_homogeneous());
        assert_eq!(p.differentiate(0), z1.scale(&g(2)));
        assert_eq!(p.differentiate(1), HoloPoly::constant(n, g(-3)));
    }

    #[test]
    fn cancellation_removes_terms() {
        let z1 = HoloPoly::var(1, 0);
        let p = z1.sub(&z1);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }
}
