use super::{buchberger, check_order, normal_form, GroebnerBasis, GroebnerError, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring};

/// `(J : g) = {h : h·g ∈ J}`.
///
/// A fresh variable `t`, greatest in a lex elimination order, gives
/// `J ∩ ⟨g⟩` as the `t`-free part of a Gröbner basis of `t·g, (1−t)·J`.
/// Each of its elements is divided exactly by `g`.
pub fn ideal_quotient(j: &Ideal, g: &Polynomial, order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    let ring = j.ring();
    ring.check_same(g.ring())?;
    check_order(ring, order)?;
    if g.is_zero() {
        return Err(GroebnerError::ZeroDivisor);
    }
    let ext = ring.with_leading_variable();
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    let t = Polynomial::var(&ext, 0)?;
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = vec![&t * &g.embed(&ext, &shift)];
    gens.extend(j.generators().iter().map(|h| &one_minus_t * &h.embed(&ext, &shift)));
    let mut precedence = vec![0];
    precedence.extend(order.precedence().iter().map(|&p| p + 1));
    let elim = buchberger(&Ideal::new(gens)?, &MonomialOrder::lex_with_precedence(&precedence)?)?;

    let lex = MonomialOrder::lex(ring.nvars());
    let mut quotient = Vec::new();
    for e in elim.elements() {
        if e.monomials().any(|m| m.exponents()[0] > 0) {
            continue;
        }
        let h = contract(e, ring);
        let div = normal_form(&h, std::slice::from_ref(g), &lex)?;
        assert!(div.remainder.is_zero(), "intersection element not divisible by g");
        quotient.push(div.quotients.into_iter().next().expect("one divisor"));
    }
    buchberger(&Ideal::new(quotient)?, order)
}

/// Drops the leading elimination variable.
fn contract(p: &Polynomial, ring: &Ring) -> Polynomial {
    Polynomial::from_terms(
        ring,
        p.terms().map(|(m, c)| (Monomial::from_exponents(&m.exponents()[1..]), Rational::clone(c))),
    )
}

/// Whether `g` is a non-zero-divisor modulo `J`, i.e. `(J : g) = J`.
pub fn annihilator_check(j: &Ideal, g: &Polynomial) -> Result<bool, GroebnerError> {
    let order = MonomialOrder::lex(j.ring().nvars());
    let colon = ideal_quotient(j, g, &order)?;
    Ok(colon == buchberger(j, &order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_membership;
    use crate::poly::parse_polynomial;

    fn ideal(gens: &[&str], r: &Ring) -> Ideal {
        Ideal::new(gens.iter().map(|g| parse_polynomial(g, r).unwrap()).collect()).unwrap()
    }

    fn p(s: &str, r: &Ring) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn square_colon_variable() {
        let r = Ring::parse("z1").unwrap();
        let q = ideal_quotient(&ideal(&["z1^2"], &r), &p("z1", &r), &MonomialOrder::lex(1)).unwrap();
        assert_eq!(q.elements(), &[p("z1", &r)]);
    }

    #[test]
    fn a1_curve_annihilator_is_maximal_ideal() {
        let r = Ring::parse("z1,z2").unwrap();
        let q = ideal_quotient(&ideal(&["z1^2+z2^2", "2*z1"], &r), &p("2*z2", &r), &MonomialOrder::lex(2)).unwrap();
        assert_eq!(q.elements(), &[p("z2", &r), p("z1", &r)]);
    }

    #[test]
    fn colon_by_member_is_unit() {
        let r = Ring::standard(2);
        let j = ideal(&["z1^3 - z2", "z2^2"], &r);
        let q = ideal_quotient(&j, &p("z1^3 - z2", &r), &MonomialOrder::lex(2)).unwrap();
        assert!(q.is_unit());
    }

    #[test]
    fn postconditions_hold() {
        let r = Ring::standard(2);
        let j = ideal(&["z1^2*z2 + z2^4", "z1^2 + 4*z2^3"], &r);
        let g = p("2*z1*z2", &r);
        let q = ideal_quotient(&j, &g, &MonomialOrder::lex(2)).unwrap();
        let jb = buchberger(&j, &MonomialOrder::lex(2)).unwrap();
        assert!(q.elements().iter().all(|h| ideal_membership(&(h * &g), &jb)));
        assert!(q.contains_ideal(&j));
    }

    #[test]
    fn annihilator_examples() {
        let r3 = Ring::standard(3);
        let f = p("z1^2+z2^3+z3^5", &r3);
        let d = f.gradient();
        let j = Ideal::new(vec![f.clone(), d[0].clone()]).unwrap();
        assert!(annihilator_check(&j, &d[1]).unwrap());
        let f = p("z1^2+z2^2*z3+z3^4", &r3);
        let d = f.gradient();
        let j = Ideal::new(vec![f.clone(), d[1].clone()]).unwrap();
        assert!(annihilator_check(&j, &d[2]).unwrap());
        let r1 = Ring::standard(1);
        assert!(!annihilator_check(&ideal(&["z1^2"], &r1), &p("z1", &r1)).unwrap());
    }
}
