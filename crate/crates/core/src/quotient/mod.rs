//! Standard monomials, Milnor numbers, weighted Hilbert functions and
//! multiplication matrices of quotient algebras `ℚ[z]/J`.

mod graded;

pub use graded::GradedQuotient;

use serde::Serialize;

use crate::groebner::{buchberger, GroebnerBasis, GroebnerError, Ideal};
use crate::linalg::Matrix;
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error("the quotient is infinite-dimensional; a weight bound is required")]
    InfiniteWithoutBound,
    #[error("the singularity is not isolated: the Jacobian quotient is infinite-dimensional")]
    NonIsolatedSingularity,
    #[error("generator `{0}` is not weight-homogeneous")]
    NotHomogeneousGenerators(String),
    #[error("polynomial has weight {got:?}, expected {expected}")]
    WeightMismatch { expected: i64, got: Option<u64> },
    #[error("weight {weight} exceeds the precomputed range 0..={max}")]
    WeightOutOfRange { weight: i64, max: u64 },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The standard monomials of a Gröbner basis, in ascending lex order.
///
/// With a weight bound only monomials of weighted degree at most the bound
/// are listed, whether or not the quotient is finite.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    gb: GroebnerBasis,
    monomials: Vec<Monomial>,
    finite: bool,
    bound: Option<(Vec<u32>, u64)>,
}

impl QuotientBasis {
    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    pub fn bound(&self) -> Option<(&[u32], u64)> {
        self.bound.as_ref().map(|(w, b)| (w.as_slice(), *b))
    }

    /// `dim ℚ[z]/J` when it is finite and the listing is complete.
    pub fn dimension(&self) -> Option<usize> {
        (self.finite && self.bound.is_none()).then_some(self.monomials.len())
    }

    /// Largest weighted degree of a listed monomial.
    pub fn socle_weight(&self, weights: &[u32]) -> Option<u64> {
        self.monomials.iter().map(|m| m.weighted_degree(weights)).max()
    }

    pub fn to_strings(&self) -> Vec<String> {
        let ring = self.gb.ring();
        self.monomials.iter().map(|m| m.display(ring).to_string()).collect()
    }
}

pub(crate) fn is_standard(leads: &[&Monomial], m: &Monomial) -> bool {
    !leads.iter().any(|l| l.divides(m))
}

/// For each variable, the smallest pure power among the leading monomials.
fn pure_power_bounds(gb: &GroebnerBasis) -> Option<Vec<u32>> {
    let n = gb.ring().nvars();
    let mut bounds: Vec<Option<u32>> = vec![None; n];
    for l in gb.leading_monomials() {
        if let Some((i, e)) = l.pure_power() {
            bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
        }
    }
    bounds.into_iter().collect()
}

/// Finite iff a pure power of every variable is a leading monomial.
pub fn is_finite(gb: &GroebnerBasis) -> bool {
    gb.is_unit() || pure_power_bounds(gb).is_some()
}

/// Monomials divisible by no leading monomial of `gb`.
pub fn standard_monomials(
    gb: &GroebnerBasis,
    weight_bound: Option<(&[u32], u64)>,
) -> Result<QuotientBasis, QuotientError> {
    let n = gb.ring().nvars();
    let leads = gb.leading_monomials();
    let finite = is_finite(gb);
    let mut monomials = Vec::new();
    if gb.is_unit() {
        // Nothing is standard.
    } else if let Some((weights, max)) = weight_bound {
        for w in 0..=max {
            monomials.extend(monomials_of_weight(weights, w).into_iter().filter(|m| is_standard(&leads, m)));
        }
    } else {
        let box_ = pure_power_bounds(gb).ok_or(QuotientError::InfiniteWithoutBound)?;
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::from_exponents(&exps);
            if is_standard(&leads, &m) {
                monomials.push(m);
            }
            let Some(i) = (0..n).rev().find(|&i| exps[i] + 1 < box_[i]) else { break };
            exps[i] += 1;
            exps[i + 1..].iter_mut().for_each(|e| *e = 0);
        }
    }
    monomials.sort();
    Ok(QuotientBasis { gb: gb.clone(), monomials, finite, bound: weight_bound.map(|(w, b)| (w.to_vec(), b)) })
}

/// All monomials of weighted degree exactly `w`, ascending in lex.
pub fn monomials_of_weight(weights: &[u32], w: u64) -> Vec<Monomial> {
    fn go(weights: &[u32], i: usize, left: u64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(exps));
            }
            return;
        }
        let wi = u64::from(weights[i]);
        for e in 0..=left / wi {
            exps.push(e as u32);
            go(weights, i + 1, left - e * wi, exps, out);
            exps.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, 0, w, &mut Vec::with_capacity(weights.len()), &mut out);
    out.sort();
    out
}

/// `dim ℚ[z]/⟨∂₁f, …, ∂ₙf⟩`.
pub fn milnor_number(f: &Polynomial) -> Result<usize, QuotientError> {
    let gb = jacobian_basis(f, &MonomialOrder::lex(f.ring().nvars()))?;
    match standard_monomials(&gb, None) {
        Ok(qb) => Ok(qb.monomials.len()),
        Err(QuotientError::InfiniteWithoutBound) => Err(QuotientError::NonIsolatedSingularity),
        Err(e) => Err(e),
    }
}

/// Gröbner basis of the Jacobian ideal of `f`.
pub fn jacobian_basis(f: &Polynomial, order: &MonomialOrder) -> Result<GroebnerBasis, QuotientError> {
    let ideal = match Ideal::new(f.gradient()) {
        Ok(i) => i,
        Err(GroebnerError::EmptyIdeal) => return Err(QuotientError::NonIsolatedSingularity),
        Err(e) => return Err(e.into()),
    };
    Ok(buchberger(&ideal, order)?)
}

/// Number of standard monomials per weighted degree `0..=bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertFunction {
    pub weights: WeightVector,
    pub values: Vec<u64>,
}

pub fn hilbert_function(
    gb: &GroebnerBasis,
    weights: &WeightVector,
    bound: u64,
) -> Result<HilbertFunction, QuotientError> {
    for g in gb.source().generators() {
        if !g.is_weight_homogeneous(&weights.weights) {
            return Err(QuotientError::NotHomogeneousGenerators(g.to_string()));
        }
    }
    let leads = gb.leading_monomials();
    let values = (0..=bound)
        .map(|w| {
            if gb.is_unit() {
                return 0;
            }
            monomials_of_weight(&weights.weights, w).iter().filter(|m| is_standard(&leads, m)).count() as u64
        })
        .collect();
    Ok(HilbertFunction { weights: weights.clone(), values })
}

/// Coefficients of `(1 − t^d) / ∏ (1 − t^{w_i})` up to `t^bound`.
pub fn principal_series(weights: &WeightVector, bound: u64) -> Vec<u64> {
    let len = bound as usize + 1;
    let mut c = vec![0i64; len];
    c[0] = 1;
    let d = weights.degree as usize;
    if d < len {
        c[d] = -1;
    }
    for &w in &weights.weights {
        let w = w as usize;
        for i in w..len {
            c[i] += c[i - w];
        }
    }
    c.into_iter().map(|x| u64::try_from(x).expect("nonnegative series")).collect()
}

/// Matrix of `P ↦ g·P` from the `source` slice to the `target` slice of a
/// graded quotient.
pub fn multiplication_matrix(
    g: &Polynomial,
    q: &GradedQuotient,
    source_weight: i64,
    target_weight: i64,
) -> Result<Matrix, QuotientError> {
    q.multiplication_matrix(g, source_weight, target_weight)
}


#[cfg(test)]
mod properties {
    use super::*;
    use crate::poly::{detect_weights, parse_polynomial, rat, Ring};
    use proptest::prelude::*;

    /// Brieskorn-Pham sums `z1^a + z2^b + z3^c` with an optional cross term.
    fn isolated() -> impl Strategy<Value = Polynomial> {
        (2u32..6, 2u32..6, 2u32..5)
            .prop_map(|(a, b, c)| parse_polynomial(&format!("z1^{a} + z2^{b} + z3^{c}"), &Ring::standard(3)).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn milnor_number_is_invariant(f in isolated(), perm in Just(vec![0usize, 1, 2]).prop_shuffle(), k in 1i64..5) {
            let r = f.ring().clone();
            let vars: Vec<Polynomial> = perm.iter().map(|&i| Polynomial::var(&r, i).unwrap()).collect();
            let g = f.substitute(&vars).unwrap().scale(&(rat(k) / rat(3)));
            let mu = milnor_number(&f).unwrap();
            prop_assert_eq!(mu, milnor_number(&g).unwrap());
            let w = detect_weights(&f).unwrap();
            let wlex = MonomialOrder::weighted_lex(&w.weights, &[1, 2, 0]).unwrap();
            prop_assert_eq!(standard_monomials(&jacobian_basis(&f, &wlex).unwrap(), None).unwrap().monomials().len(), mu);
        }

        #[test]
        fn principal_hilbert_function_matches_series(f in isolated()) {
            let w = detect_weights(&f).unwrap();
            let gb = buchberger(&Ideal::new(vec![f.clone()]).unwrap(), &MonomialOrder::lex(3)).unwrap();
            let bound = 2 * u64::from(w.degree);
            prop_assert_eq!(hilbert_function(&gb, &w, bound).unwrap().values, principal_series(&w, bound));
        }
    }
}
