use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, PolyError, Rational, Ring};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are keyed by [`Monomial`], so iteration in reverse key order is the
/// canonical descending-lex order used for printing. No zero coefficient is
/// ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Self { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring, index: usize) -> Result<Self, PolyError> {
        if index >= ring.nvars() {
            return Err(PolyError::VariableIndex { index, nvars: ring.nvars() });
        }
        Ok(Self::monomial(ring, Monomial::var(ring.nvars(), index, 1), Rational::one()))
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        if order.is_storage_lex() {
            self.terms.iter().next_back()
        } else {
            self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
        }
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self, order: &MonomialOrder) -> Option<&Rational> {
        self.leading_term(order).map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// The common weighted degree of all terms, if there is one. The zero
    /// polynomial has none.
    pub fn homogeneous_weight(&self, weights: &[u32]) -> Option<u64> {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn is_weight_homogeneous(&self, weights: &[u32]) -> bool {
        self.is_zero() || self.homogeneous_weight(weights).is_some()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · m · other`.
    pub(crate) fn add_scaled_shifted(&mut self, c: &Rational, m: &Monomial, other: &Polynomial) {
        debug_assert_eq!(self.ring, other.ring);
        for (om, oc) in &other.terms {
            self.add_term(m * om, c * oc);
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check_same(&other.ring)?;
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_scaled_shifted(c, m, other);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        out.add_scaled_shifted(c, m, self);
        out
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `∂/∂z_index`.
    pub fn derivative(&self, index: usize) -> Result<Polynomial, PolyError> {
        if index >= self.ring.nvars() {
            return Err(PolyError::VariableIndex { index, nvars: self.ring.nvars() });
        }
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.exponents_mut()[index] -= 1;
            out.add_term(dm, c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// All partial derivatives in variable order.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars()).map(|i| self.derivative(i).expect("index in range")).collect()
    }

    /// Replaces variable `i` by `images[i]`. The result lives in the ring of
    /// the images, which must all agree.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::SubstitutionArity { expected: self.ring.nvars(), got: images.len() });
        }
        let target = images[0].ring.clone();
        for img in &images[1..] {
            target.check_same(&img.ring)?;
        }
        // Powers are reused across terms.
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    term = &term * &powers[i][e];
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `mapping[i]`.
    pub(crate) fn embed(&self, target: &Ring, mapping: &[usize]) -> Polynomial {
        let n = target.nvars();
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut out = Monomial::one(n);
                for (i, &e) in m.exponents().iter().enumerate() {
                    out.exponents_mut()[mapping[i]] += e;
                }
                (out, c.clone())
            }),
        )
    }

    /// Scales so that the leading coefficient is `1`. Zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_coefficient(order) {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub(crate) fn pop_term(&mut self, m: &Monomial) -> Option<Rational> {
        self.terms.remove(m)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.ring))?;
            } else {
                write!(f, "{abs}*{}", m.display(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in [{}]", self.ring)
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods on
// untrusted input.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat};
    use proptest::prelude::*;

    fn p(s: &str, vars: &str) -> Polynomial {
        parse_polynomial(s, &Ring::parse(vars).unwrap()).unwrap()
    }

    #[test]
    fn partial_derivatives() {
        let f = p("z1^2*z2 + z2^4", "z1,z2");
        assert_eq!(f.derivative(0).unwrap(), p("2*z1*z2", "z1,z2"));
        let g = p("z1^2 + z2^2*z3 + z3^4", "z1,z2,z3");
        assert_eq!(g.derivative(2).unwrap(), p("z2^2 + 4*z3^3", "z1,z2,z3"));
        assert!(g.derivative(3).is_err());
    }

    #[test]
    fn substitution_of_cyclic_invariants() {
        let xy = Ring::parse("x,y").unwrap();
        for n in 1..=6u32 {
            let f = p(&format!("-{n}*(z1*z2 - z3^{n})"), "z1,z2,z3");
            let e = [p(&format!("x^{n}"), "x,y"), p(&format!("y^{n}"), "x,y"), p("x*y", "x,y")];
            let r = f.substitute(&e).unwrap();
            assert!(r.is_zero());
            assert_eq!(r.ring(), &xy);
        }
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = p("z1", "z1,z2");
        let b = p("z1", "z1,z3");
        assert!(matches!(a.checked_add(&b), Err(PolyError::RingMismatch { .. })));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn leading_terms_and_monic() {
        let f = p("3*z1^2 + z2^3", "z1,z2");
        let lex = MonomialOrder::lex(2);
        assert_eq!(f.leading_monomial(&lex).unwrap().exponents(), [2, 0]);
        let grl = MonomialOrder::weighted_lex(&[1, 1], &[0, 1]).unwrap();
        assert_eq!(f.leading_monomial(&grl).unwrap().exponents(), [0, 3]);
        assert_eq!(f.monic(&lex).to_string(), "z1^2 + 1/3*z2^3");
        assert_eq!(f.homogeneous_weight(&[3, 2]), Some(6));
        assert_eq!(f.homogeneous_weight(&[1, 1]), None);
    }

    #[test]
    fn printing() {
        assert_eq!(p("0", "z1").to_string(), "0");
        assert_eq!(p("-z2^4 - 4*z1^2*z2 + 1/2", "z1,z2").to_string(), "-4*z1^2*z2 - z2^4 + 1/2");
        assert_eq!(p("(z1+z2)^2 - z1^2 - 2*z1*z2", "z1,z2").to_string(), "z2^2");
        assert_eq!(p("z1", "z1").pow(0), Polynomial::one(&Ring::parse("z1").unwrap()));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u32..3, 0u32..3), -3i64..=3, 1i64..=2), 0..5).prop_map(|ts| {
            let ring = Ring::standard(2);
            Polynomial::from_terms(
                &ring,
                ts.into_iter().map(|((a, b), n, d)| (Monomial::from_exponents(&[a, b]), rat(n) / rat(d))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn derivative_is_linear_and_leibniz(a in small_poly(), b in small_poly(), i in 0usize..2) {
            let d = |x: &Polynomial| x.derivative(i).unwrap();
            prop_assert_eq!(d(&(&a + &b)), &d(&a) + &d(&b));
            prop_assert_eq!(d(&(&a * &b)), &(&a * &d(&b)) + &(&b * &d(&a)));
        }

        #[test]
        fn parse_print_is_identity(a in small_poly()) {
            let back = parse_polynomial(&a.to_string(), a.ring()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
