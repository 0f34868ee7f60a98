use std::fmt;

use smallvec::SmallVec;

use super::Ring;

/// Exponent vector, one entry per ring variable.
///
/// The derived `Ord` is lexicographic with variable 0 most significant, which
/// is also the canonical storage order of [`super::Polynomial`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Self(SmallVec::from_slice(exps))
    }

    /// `z_index^exp`.
    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = exp;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| u64::from(e) * u64::from(w)).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// The variable index if this is `z_i^e` with `e > 0`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    /// Renders with the ring's variable names, e.g. `z1^2*z3`; `1` for the
    /// unit monomial.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, ring }
    }
}

impl std::ops::Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        Monomial(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &e) in self.ring.names().iter().zip(self.m.exponents()) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[3, 1, 4]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b).unwrap(), Monomial::from_exponents(&[1, 0, 4]));
        assert_eq!(a.lcm(&Monomial::from_exponents(&[0, 2, 1])).exponents(), [2, 2, 1]);
        assert!(Monomial::from_exponents(&[1, 0, 0]).is_coprime(&Monomial::from_exponents(&[0, 3, 1])));
    }

    #[test]
    fn renders_with_names() {
        let ring = Ring::standard(3);
        assert_eq!(Monomial::from_exponents(&[2, 0, 1]).display(&ring).to_string(), "z1^2*z3");
        assert_eq!(Monomial::one(3).display(&ring).to_string(), "1");
        assert_eq!(Monomial::var(3, 1, 3).pure_power(), Some((1, 3)));
    }
}
