//! Multivariate division, reduced Gröbner bases, membership and ideal
//! quotients.

mod buchberger;
mod colon;
mod division;

pub use buchberger::{buchberger, buchberger_with, s_polynomial, GroebnerBasis, PairSelection};
pub use colon::{annihilator_check, ideal_quotient};
pub use division::{normal_form, DivisionResult};

use crate::poly::{MonomialOrder, PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("an ideal needs at least one nonzero generator")]
    EmptyIdeal,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("monomial order is for {order} variables but the ring has {ring}")]
    OrderArity { order: usize, ring: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A finite generating set of nonzero polynomials in one ring, with
/// generators that are scalar multiples of an earlier one dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        let ring = generators.first().ok_or(GroebnerError::EmptyIdeal)?.ring().clone();
        let lex = MonomialOrder::lex(ring.nvars());
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut normalized: Vec<Polynomial> = Vec::new();
        for g in generators {
            ring.check_same(g.ring())?;
            if g.is_zero() {
                continue;
            }
            let m = g.monic(&lex);
            if !normalized.contains(&m) {
                normalized.push(m);
                kept.push(g);
            }
        }
        if kept.is_empty() {
            return Err(GroebnerError::EmptyIdeal);
        }
        Ok(Self { ring, generators: kept })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// This ideal plus extra generators.
    pub fn extended(&self, extra: &[Polynomial]) -> Result<Self, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Self::new(gens)
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Whether `p` lies in the ideal with Gröbner basis `gb`.
pub fn ideal_membership(p: &Polynomial, gb: &GroebnerBasis) -> bool {
    gb.reduce(p).is_zero()
}

pub(crate) fn check_order(ring: &Ring, order: &MonomialOrder) -> Result<(), GroebnerError> {
    if order.nvars() != ring.nvars() {
        return Err(GroebnerError::OrderArity { order: order.nvars(), ring: ring.nvars() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str, r: &Ring) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn ideal_drops_zeros_and_scalar_duplicates() {
        let r = Ring::parse("z1,z2").unwrap();
        let i = Ideal::new(vec![p("0", &r), p("2*z1", &r), p("z1", &r), p("z2", &r)]).unwrap();
        assert_eq!(i.generators().len(), 2);
        assert_eq!(Ideal::new(vec![p("0", &r)]), Err(GroebnerError::EmptyIdeal));
        assert_eq!(Ideal::new(vec![]), Err(GroebnerError::EmptyIdeal));
    }

    #[test]
    fn membership_examples() {
        let r1 = Ring::parse("z1").unwrap();
        let gb = buchberger(&Ideal::new(vec![p("z1", &r1)]).unwrap(), &MonomialOrder::lex(1)).unwrap();
        assert!(!ideal_membership(&p("1", &r1), &gb));
        let r = Ring::parse("z1,z2").unwrap();
        let e7 = Ideal::new(vec![p("3*z1^2+z2^3", &r), p("3*z1*z2^2", &r)]).unwrap();
        let gb = buchberger(&e7, &MonomialOrder::lex(2)).unwrap();
        assert!(ideal_membership(&p("z2^5", &r), &gb));
        assert!(!ideal_membership(&p("z2^4", &r), &gb));
    }

    #[test]
    fn surface_is_in_its_jacobian_ideal() {
        let r = Ring::standard(3);
        for f in ["z1^2+z2^3+z3^5", "z1^2+z2^2*z3+z3^4", "z1^2+z2^3+z2*z3^3"] {
            let f = p(f, &r);
            let gb = buchberger(&Ideal::new(f.gradient()).unwrap(), &MonomialOrder::lex(3)).unwrap();
            assert!(ideal_membership(&f, &gb));
        }
    }
}
