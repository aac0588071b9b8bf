//! Polynomial model hypersurfaces Im w = Q(z, conj z).

use super::gaussian::GaussianRational;
use super::herm::HermPoly;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("defining polynomial is zero")]
    ZeroPolynomial,
    #[error("defining polynomial is not real-valued (first bad term alpha={alpha:?} beta={beta:?})")]
    NotRealValued { alpha: Vec<u32>, beta: Vec<u32> },
    #[error("defining polynomial is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: u32 },
    #[error("pluriharmonic term alpha={alpha:?} beta={beta:?} (pass allow_pluriharmonic to admit it)")]
    Pluriharmonic { alpha: Vec<u32>, beta: Vec<u32> },
    #[error("variable count mismatch: polynomial has {poly}, model declares {model}")]
    VariableCount { poly: usize, model: usize },
    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
}

/// Model hypersurface in C^{n+1}: the graph Im w = Q with Q a nonzero
/// real-valued homogeneous polynomial of degree m.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelHypersurface {
    n: usize,
    m: u32,
    q: HermPoly,
    allow_pluriharmonic: bool,
}

impl ModelHypersurface {
    pub fn new(n: usize, m: u32, q: HermPoly) -> Result<Self, ModelError> {
        Self::with_flags(n, m, q, false)
    }

    pub fn with_flags(n: usize, m: u32, q: HermPoly, allow_pluriharmonic: bool) -> Result<Self, ModelError> {
        if q.n() != n {
            return Err(ModelError::VariableCount { poly: q.n(), model: n });
        }
        if m < 2 {
            return Err(ModelError::DegreeTooSmall(m));
        }
        if q.is_zero() {
            return Err(ModelError::ZeroPolynomial);
        }
        if !q.is_homogeneous_of_degree(m) {
            return Err(ModelError::NotHomogeneous { expected: m });
        }
        if let Some(((a, b), c)) = q.terms().find(|((a, b), c)| {
            q.coeff(b, a) != c.conj()
        }).map(|(k, c)| (k.clone(), c.clone())) {
            let _ = c;
            return Err(ModelError::NotRealValued { alpha: a, beta: b });
        }
        if !allow_pluriharmonic {
            if let Some((a, b)) = q.pluriharmonic_term() {
                return Err(ModelError::Pluriharmonic { alpha: a, beta: b });
            }
        }
        Ok(ModelHypersurface { n, m, q, allow_pluriharmonic })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> &HermPoly {
        &self.q
    }

    pub fn allows_pluriharmonic(&self) -> bool {
        self.allow_pluriharmonic
    }
}

/// Convenience: build Q from (alpha, beta, coefficient) triples.
pub fn poly_from_terms(n: usize, terms: &[(Vec<u32>, Vec<u32>, GaussianRational)]) -> HermPoly {
    let mut q = HermPoly::zero(n);
    for (a, b, c) in terms {
        q.add_term(a.clone(), b.clone(), c.clone());
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        // Lewy: Im w = |z|^2
        let q = HermPoly::monomial(1, vec![1], vec![1], GaussianRational::one());
        assert!(ModelHypersurface::new(1, 2, q).is_ok());

        // non-real: z1 zbar2 alone
        let q = HermPoly::monomial(2, vec![1, 0], vec![0, 1], GaussianRational::one());
        assert!(matches!(
            ModelHypersurface::new(2, 2, q),
            Err(ModelError::NotRealValued { .. })
        ));

        // pluriharmonic: (Re z)^2 = (z^2 + 2 z zbar + zbar^2)/4
        let mut q = HermPoly::zero(1);
        q.add_term(vec![2], vec![0], GaussianRational::from_parts(1, 4, 0, 1));
        q.add_term(vec![1], vec![1], GaussianRational::from_parts(1, 2, 0, 1));
        q.add_term(vec![0], vec![2], GaussianRational::from_parts(1, 4, 0, 1));
        assert!(matches!(ModelHypersurface::new(1, 2, q.clone()), Err(ModelError::Pluriharmonic { .. })));
        assert!(ModelHypersurface::with_flags(1, 2, q, true).is_ok());

        // inhomogeneous
        let q = HermPoly::monomial(1, vec![1], vec![1], GaussianRational::one())
            .add(&HermPoly::monomial(1, vec![2], vec![2], GaussianRational::one()));
        assert!(matches!(ModelHypersurface::new(1, 2, q), Err(ModelError::NotHomogeneous { .. })));
    }
}
