use std::cmp::Ordering;
use std::fmt;

use super::division::remainder;
use super::{check_order, GroebnerError, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Reduced monic Gröbner basis, sorted by ascending leading monomial.
///
/// Two bases compare equal when they have the same order and elements, which
/// for reduced bases means they generate the same ideal.
#[derive(Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    source: Ideal,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroebnerBasis").field("order", &self.order).field("elements", &self.elements).finish()
    }
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.elements.iter().map(|g| g.leading_monomial(&self.order).expect("nonzero")).collect()
    }

    /// Normal form of `p` modulo the basis.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        remainder(p, &self.elements, &self.order)
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    /// Whether every generator of `ideal` lies in this ideal.
    pub fn contains_ideal(&self, ideal: &Ideal) -> bool {
        ideal.generators().iter().all(|g| self.reduce(g).is_zero())
    }

    /// Whether all S-polynomials reduce to zero.
    pub fn check_s_pairs(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| self.reduce(&s_polynomial(&g[i], &g[j], &self.order)).is_zero()))
    }

    /// Whether no term of any element is divisible by the leading monomial of
    /// another element, and all elements are monic.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.elements.iter().enumerate().all(|(i, g)| {
            g.leading_coefficient(&self.order).is_some_and(num_traits::One::is_one)
                && g.monomials().all(|m| leads.iter().enumerate().all(|(j, l)| i == j || !l.divides(m)))
        })
    }
}

/// `lcm/lt(f) · f − lcm/lt(g) · g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let l = fm.lcm(gm);
    let mut out = f.mul_monomial(&fm.quotient_of(&l).expect("lcm"), &fc.recip());
    out.add_scaled_shifted(&-gc.recip(), &gm.quotient_of(&l).expect("lcm"), g);
    out
}

/// Which critical pair to process next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairSelection {
    /// Smallest lcm of leading monomials first.
    #[default]
    Normal,
    /// Oldest pair first.
    Fifo,
    /// Newest pair first.
    Lifo,
}

/// Reduced Gröbner basis with the normal selection strategy.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(ideal, order, PairSelection::Normal)
}

/// Buchberger's algorithm with the product and chain criteria. The result
/// does not depend on `selection`.
pub fn buchberger_with(
    ideal: &Ideal,
    order: &MonomialOrder,
    selection: PairSelection,
) -> Result<GroebnerBasis, GroebnerError> {
    check_order(ideal.ring(), order)?;
    let mut basis: Vec<Polynomial> = ideal.generators().iter().map(|g| g.monic(order)).collect();
    let mut leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).expect("nonzero").clone()).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        let at = match selection {
            PairSelection::Normal => {
                let lcm = |&(i, j): &(usize, usize)| leads[i].lcm(&leads[j]);
                (0..pairs.len())
                    .min_by(|&a, &b| match order.cmp(&lcm(&pairs[a]), &lcm(&pairs[b])) {
                        Ordering::Equal => pairs[a].cmp(&pairs[b]),
                        o => o,
                    })
                    .expect("nonempty")
            }
            PairSelection::Fifo => 0,
            PairSelection::Lifo => pairs.len() - 1,
        };
        let (i, j) = pairs.remove(at);
        if leads[i].is_coprime(&leads[j]) || chain_criterion(i, j, &leads, &pairs) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = remainder(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order);
        let k = basis.len();
        leads.push(r.leading_monomial(order).expect("nonzero").clone());
        basis.push(r);
        pairs.extend((0..k).map(|i| (i, k)));
    }
    Ok(GroebnerBasis { order: order.clone(), elements: reduce_basis(basis, order), source: ideal.clone() })
}

/// Some other element's leading monomial divides `lcm(i, j)` and both pairs
/// with it are already processed.
fn chain_criterion(i: usize, j: usize, leads: &[Monomial], pending: &[(usize, usize)]) -> bool {
    let l = leads[i].lcm(&leads[j]);
    let open = |a: usize, b: usize| pending.contains(&(a.min(b), a.max(b)));
    (0..leads.len()).any(|k| k != i && k != j && leads[k].divides(&l) && !open(i, k) && !open(j, k))
}

/// Minimizes, inter-reduces and sorts a Gröbner basis.
fn reduce_basis(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let lead = |g: &Polynomial| g.leading_monomial(order).expect("nonzero").clone();
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = lead(g);
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let lh = lead(h);
            j != i && lh.divides(&lg) && (lh != lg || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let g = &minimal[i];
            let lg = lead(g);
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
            let mut tail = g.clone();
            let lc = tail.pop_term(&lg).expect("leading term");
            let mut r = remainder(&tail, &others, order);
            r.add_term(lg, lc);
            r.monic(order)
        })
        .collect();
    out.sort_by(|a, b| order.cmp(&lead(a), &lead(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn gb(gens: &[&str], vars: &str) -> Vec<String> {
        let r = Ring::parse(vars).unwrap();
        let ideal = Ideal::new(gens.iter().map(|g| parse_polynomial(g, &r).unwrap()).collect()).unwrap();
        let b = buchberger(&ideal, &MonomialOrder::lex(r.nvars())).unwrap();
        assert!(b.check_s_pairs() && b.is_reduced());
        b.elements().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn d5_curve_f_and_second_partial() {
        assert_eq!(gb(&["z1^2*z2+z2^4", "z1^2+4*z2^3"], "z1,z2"), ["z2^4", "z1^2 + 4*z2^3"]);
    }

    #[test]
    fn e7_curve_partials() {
        assert_eq!(gb(&["3*z1^2+z2^3", "3*z1*z2^2"], "z1,z2"), ["z2^5", "z1*z2^2", "z1^2 + 1/3*z2^3"]);
    }

    #[test]
    fn d5_surface_partials_and_f() {
        assert_eq!(
            gb(&["2*z1", "2*z2*z3", "z2^2+4*z3^3", "z1^2+z2^2*z3+z3^4"], "z1,z2,z3"),
            ["z3^4", "z2*z3", "z2^2 + 4*z3^3", "z1"]
        );
    }

    #[test]
    fn unit_ideal() {
        assert_eq!(gb(&["z1*z2 - 1", "z1"], "z1,z2"), ["1"]);
    }

    #[test]
    fn selection_strategy_does_not_matter() {
        let r = Ring::standard(3);
        let gens: Vec<Polynomial> =
            ["z1^2+z2*z3-1", "z2^2-z1*z3", "z3^3+z1"].iter().map(|g| parse_polynomial(g, &r).unwrap()).collect();
        let ideal = Ideal::new(gens).unwrap();
        let order = MonomialOrder::lex(3);
        let normal = buchberger(&ideal, &order).unwrap();
        for sel in [PairSelection::Fifo, PairSelection::Lifo] {
            assert_eq!(buchberger_with(&ideal, &order, sel).unwrap(), normal);
        }
        let w = MonomialOrder::weighted_lex(&[1, 1, 1], &[0, 1, 2]).unwrap();
        let grevlike = buchberger(&ideal, &w).unwrap();
        assert!(grevlike.check_s_pairs());
        assert!(grevlike.contains_ideal(&ideal));
    }
}
