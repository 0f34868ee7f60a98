use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::{Monomial, PolyError};

/// A multiplicative total order on monomials with `1` minimal.
///
/// `precedence[0]` is the most significant variable. A weighted order first
/// compares weighted degrees and breaks ties lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    precedence: SmallVec<[usize; 4]>,
    weights: Option<SmallVec<[u32; 4]>>,
}

impl MonomialOrder {
    /// Lex with `z1 > z2 > … > zn`.
    pub fn lex(nvars: usize) -> Self {
        Self { precedence: (0..nvars).collect(), weights: None }
    }

    pub fn lex_with_precedence(precedence: &[usize]) -> Result<Self, PolyError> {
        check_permutation(precedence)?;
        Ok(Self { precedence: precedence.into(), weights: None })
    }

    pub fn weighted_lex(weights: &[u32], precedence: &[usize]) -> Result<Self, PolyError> {
        check_permutation(precedence)?;
        if weights.len() != precedence.len() || weights.contains(&0) {
            return Err(PolyError::InvalidVariables("weighted order needs one positive weight per variable".into()));
        }
        Ok(Self { precedence: precedence.into(), weights: Some(weights.into()) })
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    /// True for plain lex with the identity precedence, which coincides with
    /// the storage order of polynomial terms.
    pub fn is_storage_lex(&self) -> bool {
        self.weights.is_none() && self.precedence.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if let Some(w) = &self.weights {
            let ord = a.weighted_degree(w).cmp(&b.weighted_degree(w));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        let (ea, eb) = (a.exponents(), b.exponents());
        for &i in &self.precedence {
            match ea[i].cmp(&eb[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

fn check_permutation(p: &[usize]) -> Result<(), PolyError> {
    let mut seen = vec![false; p.len()];
    for &i in p {
        if i >= p.len() || std::mem::replace(&mut seen[i], true) {
            return Err(PolyError::InvalidVariables(format!("{p:?} is not a permutation")));
        }
    }
    Ok(())
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.weights {
            None => write!(f, "lex{:?}", self.precedence.as_slice()),
            Some(w) => write!(f, "wlex{:?}{:?}", w.as_slice(), self.precedence.as_slice()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 3).prop_map(|v| Monomial::from_exponents(&v))
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::lex(3),
            MonomialOrder::lex_with_precedence(&[2, 0, 1]).unwrap(),
            MonomialOrder::weighted_lex(&[4, 3, 2], &[0, 1, 2]).unwrap(),
            MonomialOrder::weighted_lex(&[1, 1, 1], &[2, 1, 0]).unwrap(),
        ]
    }

    #[test]
    fn storage_lex_matches_derived_ord() {
        let o = MonomialOrder::lex(3);
        assert!(o.is_storage_lex());
        let a = Monomial::from_exponents(&[1, 0, 0]);
        let b = Monomial::from_exponents(&[0, 5, 5]);
        assert_eq!(o.cmp(&a, &b), a.cmp(&b));
        assert_eq!(o.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(MonomialOrder::lex_with_precedence(&[0, 0, 1]).is_err());
        assert!(MonomialOrder::weighted_lex(&[1, 0, 1], &[0, 1, 2]).is_err());
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_and_well_founded(a in mono(), b in mono(), c in mono()) {
            for o in orders() {
                let one = Monomial::one(3);
                prop_assert_ne!(o.cmp(&one, &a), Ordering::Greater);
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&(&a * &c), &(&b * &c)));
                prop_assert_eq!(ab == Ordering::Equal, a == b);
            }
        }
    }
}
