use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::{is_standard, monomials_of_weight, QuotientError};
use crate::groebner::GroebnerBasis;
use crate::linalg::Matrix;
use crate::poly::{Monomial, Polynomial, Rational};

/// A quotient `ℚ[z]/J` by a weight-homogeneous ideal, with the standard
/// monomials of every weight `0..=max_weight` precomputed.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    gb: GroebnerBasis,
    weights: Vec<u32>,
    max_weight: u64,
    slices: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
}

impl GradedQuotient {
    pub fn new(gb: &GroebnerBasis, weights: &[u32], max_weight: u64) -> Result<Self, QuotientError> {
        for g in gb.source().generators() {
            if !g.is_weight_homogeneous(weights) {
                return Err(QuotientError::NotHomogeneousGenerators(g.to_string()));
            }
        }
        let leads = gb.leading_monomials();
        let unit = gb.is_unit();
        let slices: Vec<Vec<Monomial>> = (0..=max_weight)
            .into_par_iter()
            .map(|w| {
                if unit {
                    return Vec::new();
                }
                monomials_of_weight(weights, w).into_iter().filter(|m| is_standard(&leads, m)).collect()
            })
            .collect();
        let index = slices.iter().flat_map(|s| s.iter().enumerate().map(|(i, m)| (m.clone(), i))).collect();
        Ok(Self { gb: gb.clone(), weights: weights.to_vec(), max_weight, slices, index })
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    fn check(&self, w: i64) -> Result<(), QuotientError> {
        if w > self.max_weight as i64 {
            return Err(QuotientError::WeightOutOfRange { weight: w, max: self.max_weight });
        }
        Ok(())
    }

    /// Standard monomials of weight `w`; empty for negative `w`.
    pub fn slice(&self, w: i64) -> Result<&[Monomial], QuotientError> {
        self.check(w)?;
        Ok(if w < 0 { &[] } else { &self.slices[w as usize] })
    }

    pub fn dim(&self, w: i64) -> Result<usize, QuotientError> {
        Ok(self.slice(w)?.len())
    }

    /// Coordinates of the normal form of a weight-`w` polynomial in the
    /// standard monomials of that slice.
    pub fn coordinates(&self, p: &Polynomial, w: i64) -> Result<Vec<Rational>, QuotientError> {
        let basis = self.slice(w)?;
        let r = self.gb.reduce(p);
        let mut out = vec![Rational::zero(); basis.len()];
        for (m, c) in r.terms() {
            let got = m.weighted_degree(&self.weights);
            if got as i64 != w {
                return Err(QuotientError::WeightMismatch { expected: w, got: Some(got) });
            }
            out[self.index[m]] = c.clone();
        }
        Ok(out)
    }

    /// Matrix of multiplication by `g` from slice `source` to slice
    /// `target`; column `j` holds the image of the `j`-th standard monomial.
    pub fn multiplication_matrix(&self, g: &Polynomial, source: i64, target: i64) -> Result<Matrix, QuotientError> {
        self.check(source)?;
        self.check(target)?;
        if !g.is_zero() {
            let gw = g.homogeneous_weight(&self.weights);
            if gw.map(|x| x as i64) != Some(target - source) {
                return Err(QuotientError::WeightMismatch { expected: target - source, got: gw });
            }
        }
        let rows = self.dim(target)?;
        let cols = self
            .slice(source)?
            .iter()
            .map(|m| {
                if g.is_zero() {
                    return Ok(vec![Rational::zero(); rows]);
                }
                self.coordinates(&g.mul_monomial(m, &num_traits::One::one()), target)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(rows, cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, Ideal};
    use crate::poly::{parse_polynomial, MonomialOrder, Ring};

    fn setup(f: &str) -> (Ring, Polynomial, GradedQuotient) {
        let r = Ring::standard(3);
        let f = parse_polynomial(f, &r).unwrap();
        let wv = crate::poly::detect_weights(&f).unwrap();
        let gb = buchberger(&Ideal::new(vec![f.clone()]).unwrap(), &MonomialOrder::lex(3)).unwrap();
        let q = GradedQuotient::new(&gb, &wv.weights, 40).unwrap();
        (r, f, q)
    }

    #[test]
    fn unit_multiplier_is_identity() {
        let (r, _, q) = setup("z1^2+z2^2*z3+z3^4");
        for w in 0..=24 {
            let m = q.multiplication_matrix(&Polynomial::one(&r), w, w).unwrap();
            assert_eq!(m, Matrix::identity(q.dim(w).unwrap()));
        }
    }

    #[test]
    fn partial_is_nonzero_and_f_is_zero() {
        let (_, f, q) = setup("z1^2+z2^2*z3+z3^4");
        let d1 = f.derivative(0).unwrap();
        let m = q.multiplication_matrix(&d1, 0, 4).unwrap();
        assert_eq!(m.cols(), 1);
        assert!(!m.is_zero());
        for w in 0..=16 {
            assert!(q.multiplication_matrix(&f, w, w + 8).unwrap().is_zero());
        }
    }

    #[test]
    fn products_compose() {
        let (r, f, q) = setup("z1^2+z2^3+z3^5");
        let g = f.derivative(1).unwrap();
        // Weights (15, 10, 6): wt(g) = 20, wt(h) = 12.
        let h = parse_polynomial("z3^2", &r).unwrap();
        let (gw, hw) = (20, 12);
        let prod = q.multiplication_matrix(&(&g * &h), 0, gw + hw).unwrap();
        let composed =
            q.multiplication_matrix(&g, hw, gw + hw).unwrap().mul(&q.multiplication_matrix(&h, 0, hw).unwrap());
        assert_eq!(prod, composed);
    }

    #[test]
    fn weight_errors() {
        let (r, _, q) = setup("z1^2+z2^3+z3^5");
        let z1 = parse_polynomial("z1", &r).unwrap();
        assert!(matches!(q.multiplication_matrix(&z1, 0, 3), Err(QuotientError::WeightMismatch { .. })));
        assert!(matches!(q.slice(41), Err(QuotientError::WeightOutOfRange { .. })));
        assert!(q.slice(-3).unwrap().is_empty());
    }
}
