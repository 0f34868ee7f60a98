//! Quasi-homogeneous weight detection.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{rat, PolyError, Polynomial, Rational};
use crate::linalg::{nullspace, Matrix};

/// Positive integer weights `w_i` and the weighted degree `d` of a
/// quasi-homogeneous polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightVector {
    pub weights: Vec<u32>,
    pub degree: u32,
}

impl WeightVector {
    /// Panics if any weight or the degree is zero.
    pub fn new(weights: Vec<u32>, degree: u32) -> Self {
        assert!(degree > 0 && weights.iter().all(|&w| w > 0), "weights must be positive");
        Self { weights, degree }
    }

    pub fn sum(&self) -> u64 {
        self.weights.iter().map(|&w| w as u64).sum()
    }

    /// Whether every monomial of `f` has weighted degree `self.degree`.
    pub fn is_satisfied_by(&self, f: &Polynomial) -> bool {
        !f.is_zero() && f.monomials().all(|m| m.weighted_degree(&self.weights) == self.degree as u64)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        write!(f, "({}; {})", ws.join(","), self.degree)
    }
}

/// Finds coprime positive integer weights making `f` weight-homogeneous.
///
/// The unknowns `(w_1, …, w_n, d)` satisfy `Σ e_i w_i = d` for every support
/// exponent `e`. When that solution space is a line the answer is its
/// primitive positive generator. Otherwise the nonnegative solutions form a
/// cone and the result is the sum of the primitive generators of its extreme
/// rays, a canonical interior point.
pub fn detect_weights(f: &Polynomial) -> Result<WeightVector, PolyError> {
    if f.is_zero() {
        return Err(PolyError::NotQuasiHomogeneous);
    }
    let n = f.ring().nvars();
    let system = Matrix::from_rows(
        f.monomials()
            .map(|m| {
                let mut row: Vec<Rational> = m.exponents().iter().map(|&e| rat(e as i64)).collect();
                row.push(rat(-1));
                row
            })
            .collect(),
    );
    let basis = nullspace(&system);
    let point = match basis.len() {
        0 => return Err(PolyError::NotQuasiHomogeneous),
        1 => orient(primitive(&basis[0])).ok_or(PolyError::NotQuasiHomogeneous)?,
        k => {
            let rays = extreme_rays(&basis, n + 1, k);
            rays.iter().fold(vec![BigInt::zero(); n + 1], |acc, r| acc.iter().zip(r).map(|(a, b)| a + b).collect())
        }
    };
    let g = point.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || point.iter().any(|x| !x.is_positive()) {
        return Err(PolyError::NotQuasiHomogeneous);
    }
    let ints: Option<Vec<u32>> = point.iter().map(|x| (x / &g).to_u32()).collect();
    let mut ints = ints.ok_or(PolyError::NotQuasiHomogeneous)?;
    let degree = ints.pop().expect("degree slot");
    let wv = WeightVector { weights: ints, degree };
    debug_assert!(wv.is_satisfied_by(f));
    Ok(wv)
}

/// Clears denominators and divides by the content.
fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Flips the sign so that all entries are nonnegative, if possible.
fn orient(v: Vec<BigInt>) -> Option<Vec<BigInt>> {
    if v.iter().all(|x| !x.is_negative()) {
        Some(v)
    } else if v.iter().all(|x| !x.is_positive()) {
        Some(v.into_iter().map(|x| -x).collect())
    } else {
        None
    }
}

/// Primitive generators of the extreme rays of `span(basis) ∩ ℝ≥0^len`.
/// A ray is extreme when it is cut out by `k - 1` vanishing coordinates.
fn extreme_rays(basis: &[Vec<Rational>], len: usize, k: usize) -> Vec<Vec<BigInt>> {
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    for mask in 0u32..(1 << len) {
        if mask.count_ones() as usize != k - 1 {
            continue;
        }
        // Coefficients c with Σ c_j basis_j vanishing on the masked coordinates.
        let rows: Vec<Vec<Rational>> =
            (0..len).filter(|i| mask & (1 << i) != 0).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
        let coeffs = nullspace(&Matrix::from_rows(rows));
        if coeffs.len() != 1 {
            continue;
        }
        let v: Vec<Rational> = (0..len).map(|i| basis.iter().zip(&coeffs[0]).map(|(b, c)| &b[i] * c).sum()).collect();
        if let Some(r) = orient(primitive(&v)) {
            if r.iter().any(|x| !x.is_zero()) && !rays.contains(&r) {
                rays.push(r);
            }
        }
    }
    rays
}
