use super::{check_order, GroebnerError};
use crate::poly::{MonomialOrder, Polynomial};

/// `dividend = Σ quotients[i] · divisors[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division of `p` by `divisors`. At every step the leading
/// term is divided by the first divisor whose leading monomial divides it;
/// if none does, it moves to the remainder.
pub fn normal_form(
    p: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> Result<DivisionResult, GroebnerError> {
    check_order(p.ring(), order)?;
    for d in divisors {
        p.ring().check_same(d.ring())?;
        if d.is_zero() {
            return Err(GroebnerError::ZeroDivisor);
        }
    }
    let leads: Vec<_> = divisors
        .iter()
        .map(|d| {
            let (m, c) = d.leading_term(order).expect("nonzero divisor");
            (m.clone(), c.clone())
        })
        .collect();
    let ring = p.ring();
    let mut quotients = vec![Polynomial::zero(ring); divisors.len()];
    let mut remainder = Polynomial::zero(ring);
    let mut rest = p.clone();
    while let Some((m, c)) = rest.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let (lm, lc) = &leads[i];
                let shift = lm.quotient_of(&m).expect("divides");
                let coef = &c / lc;
                quotients[i].add_term(shift.clone(), coef.clone());
                rest.add_scaled_shifted(&-coef, &shift, &divisors[i]);
            }
            None => {
                rest.pop_term(&m);
                remainder.add_term(m, c);
            }
        }
    }
    let out = DivisionResult { quotients, remainder };
    debug_assert!(reconstructs(p, divisors, &out), "division identity violated");
    debug_assert!(is_reduced(&out.remainder, divisors, order));
    Ok(out)
}

/// Remainder only, skipping quotient bookkeeping.
pub(crate) fn remainder(p: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let mut remainder = Polynomial::zero(p.ring());
    let mut rest = p.clone();
    while let Some((m, c)) = rest.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match divisors.iter().find(|d| d.leading_monomial(order).is_some_and(|lm| lm.divides(&m))) {
            Some(d) => {
                let (lm, lc) = d.leading_term(order).expect("nonzero");
                let shift = lm.quotient_of(&m).expect("divides");
                rest.add_scaled_shifted(&-(&c / lc), &shift, d);
            }
            None => {
                rest.pop_term(&m);
                remainder.add_term(m, c);
            }
        }
    }
    remainder
}

pub(crate) fn reconstructs(p: &Polynomial, divisors: &[Polynomial], r: &DivisionResult) -> bool {
    let mut acc = r.remainder.clone();
    for (q, d) in r.quotients.iter().zip(divisors) {
        acc = &acc + &(q * d);
    }
    &acc - p == Polynomial::zero(p.ring()) && r.quotients.len() == divisors.len()
}

/// Whether no term of `r` is divisible by a leading monomial of `divisors`.
pub(crate) fn is_reduced(r: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> bool {
    r.monomials().all(|m| divisors.iter().all(|d| !d.leading_monomial(order).is_some_and(|lm| lm.divides(m))))
}


#[cfg(test)]
mod properties {
    use super::*;
    use crate::poly::{rat, Monomial, Ring};
    use proptest::prelude::*;

    fn poly(max: u32) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0..=max, 0..=max, 0..=max), -4i64..=4), 1..5).prop_map(|ts| {
            Polynomial::from_terms(
                &Ring::standard(3),
                ts.into_iter().map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), rat(k))),
            )
        })
    }

    proptest! {
        #[test]
        fn division_reconstructs(p in poly(4), ds in proptest::collection::vec(poly(2), 1..4), weighted in any::<bool>()) {
            let ds: Vec<Polynomial> = ds.into_iter().filter(|d| !d.is_zero()).collect();
            prop_assume!(!ds.is_empty());
            let order = if weighted {
                MonomialOrder::weighted_lex(&[3, 1, 2], &[2, 0, 1]).unwrap()
            } else {
                MonomialOrder::lex(3)
            };
            let r = normal_form(&p, &ds, &order).unwrap();
            prop_assert!(reconstructs(&p, &ds, &r));
            prop_assert!(is_reduced(&r.remainder, &ds, &order));
            let lead = |x: &Polynomial| x.leading_monomial(&order).cloned();
            for (q, d) in r.quotients.iter().zip(&ds) {
                if !q.is_zero() {
                    let qd = lead(&(q * d)).unwrap();
                    prop_assert_ne!(order.cmp(&qd, &lead(&p).unwrap()), std::cmp::Ordering::Greater);
                }
            }
        }
    }
}
