//! Brute-force reference computations that avoid Gröbner bases entirely.

#![allow(dead_code)]

use kh_core::poly::{Monomial, Polynomial};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank by plain Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, pivot);
        let inv = BigRational::one() / rows[r][c].clone();
        let pivot_row: Vec<BigRational> = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    r
}

/// Exponent vectors with `Σ wᵢ eᵢ = w`.
pub fn monomials_of_weight(weights: &[u32], w: i64) -> Vec<Vec<u32>> {
    if w < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; weights.len()];
    fn go(weights: &[u32], i: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let wi = i64::from(weights[i]);
        let mut e = 0;
        while e * wi <= left {
            cur[i] = e as u32;
            go(weights, i + 1, left - e * wi, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    go(weights, 0, w, &mut cur, &mut out);
    out
}

/// Exponent vectors of total degree at most `d`.
pub fn monomials_up_to_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d as i64).flat_map(|k| monomials_of_weight(&vec![1; n], k)).collect()
}

/// `dim (k[z]/⟨f⟩)_w`: `f` is a nonzerodivisor, so this is the number of
/// monomials of weight `w` minus those of weight `w − d`.
pub fn principal_dim(weights: &[u32], d: u32, w: i64) -> i64 {
    monomials_of_weight(weights, w).len() as i64 - monomials_of_weight(weights, w - i64::from(d)).len() as i64
}

fn coords(p: &Polynomial, basis: &[Vec<u32>]) -> Vec<BigRational> {
    basis.iter().map(|e| p.coefficient(&Monomial::from_exponents(e))).collect()
}

fn shifted(p: &Polynomial, e: &[u32]) -> Polynomial {
    p.mul_monomial(&Monomial::from_exponents(e), &BigRational::one())
}

/// `dim (k[z]/⟨g₁, …, g_s⟩)_w` for weight-homogeneous `gᵢ`: monomials of
/// weight `w` minus the rank of all `m·gᵢ` landing in weight `w`.
pub fn quotient_dim(gens: &[Polynomial], weights: &[u32], w: i64) -> i64 {
    let basis = monomials_of_weight(weights, w);
    let mut rows = Vec::new();
    for g in gens {
        let Some(gw) = g.homogeneous_weight(weights) else { panic!("inhomogeneous {g}") };
        for e in monomials_of_weight(weights, w - gw as i64) {
            rows.push(coords(&shifted(g, &e), &basis));
        }
    }
    basis.len() as i64 - rank(rows) as i64
}

/// Total dimension of a graded quotient known to vanish above `top`.
pub fn total_quotient_dim(gens: &[Polynomial], weights: &[u32], top: i64) -> i64 {
    (0..=top).map(|w| quotient_dim(gens, weights, w)).sum()
}

/// Whether `p ∈ ⟨gens⟩` with cofactors keeping every product in total
/// degree at most `degree`. A positive answer is a certificate.
pub fn member_within_degree(p: &Polynomial, gens: &[Polynomial], degree: u32) -> bool {
    let n = p.ring().nvars();
    let basis = monomials_up_to_degree(n, degree);
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.total_degree().unwrap_or(0);
        if gd > degree {
            continue;
        }
        for e in monomials_up_to_degree(n, degree - gd) {
            rows.push(coords(&shifted(g, &e), &basis));
        }
    }
    let without = rank(rows.clone());
    rows.push(coords(p, &basis));
    rank(rows) == without
}
