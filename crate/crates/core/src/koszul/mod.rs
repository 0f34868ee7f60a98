//! The weight-graded complex `T = A[η₁..ηₙ, b]`, `A = ℚ[z]/⟨f⟩`, with
//! differential `d = Σⱼ ∂ⱼf · b · ∂/∂ηⱼ`.
//!
//! Hodge degrees: `z` has degree 0, `η` degree 1 and `b` degree 2, so
//! `T(p) = ⊕_{2a+|S|=p} A·bᵃ·η_S`. For the internal weight grading `ηᵢ` has
//! weight `−wᵢ` and `b` has weight `−d`; then `d` preserves weight and every
//! `(p, w)` slice is finite-dimensional. A generator `bᵃ·η_S` carries the
//! shift `a·d + Σ_{i∈S} wᵢ`, and `g·bᵃ·η_S` has weight `wt(g) − shift`.
//!
//! The derivation `∂/∂ηⱼ` acts from the right: on `η_{s₁}⋯η_{sₘ}` it removes
//! `η_{sₜ}` with sign `(−1)^{m−t}`.

mod cohomology;

pub use cohomology::{CohomologyReport, DegreeReport, Expectation, SliceData};

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::groebner::{buchberger, GroebnerError, Ideal};
use crate::linalg::{exact_rank, Matrix};
use crate::poly::{detect_weights, Monomial, MonomialOrder, PolyError, Polynomial, WeightVector};
use crate::quotient::{jacobian_basis, standard_monomials, GradedQuotient, QuotientError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KoszulError {
    #[error("only 1, 2 or 3 variables are supported, got {0}")]
    UnsupportedDimension(usize),
    #[error("f is not quasi-homogeneous")]
    NotQuasiHomogeneous,
    #[error("degree {p} and weight {w} lie outside the computed range")]
    OutOfRange { p: usize, w: i64 },
    #[error("weight bound {bound} too small: H^{p} is nonzero in the margin band")]
    BoundTooSmall { p: usize, bound: u64 },
    #[error("expected {expected} expectations, got {got}")]
    ExpectationArity { expected: usize, got: usize },
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

impl From<PolyError> for KoszulError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::NotQuasiHomogeneous => KoszulError::NotQuasiHomogeneous,
            other => KoszulError::Groebner(other.into()),
        }
    }
}

/// `b^b_power · η_{eta[0]} ∧ η_{eta[1]} ∧ …` (0-based variable indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct KoszulGenerator {
    b_power: u32,
    eta: Vec<usize>,
    hodge_degree: usize,
    weight_shift: u64,
}

impl KoszulGenerator {
    fn new(b_power: u32, eta: Vec<usize>, weights: &WeightVector) -> Self {
        let hodge_degree = 2 * b_power as usize + eta.len();
        let weight_shift = Self::shift_of(b_power, &eta, weights);
        Self { b_power, eta, hodge_degree, weight_shift }
    }

    fn shift_of(b_power: u32, eta: &[usize], weights: &WeightVector) -> u64 {
        u64::from(b_power) * u64::from(weights.degree) + eta.iter().map(|&i| u64::from(weights.weights[i])).sum::<u64>()
    }

    pub fn b_power(&self) -> u32 {
        self.b_power
    }

    pub fn eta(&self) -> &[usize] {
        &self.eta
    }

    pub fn hodge_degree(&self) -> usize {
        self.hodge_degree
    }

    pub fn weight_shift(&self) -> u64 {
        self.weight_shift
    }

    /// Whether the stored degree and shift agree with the fields.
    pub fn is_consistent(&self, weights: &WeightVector) -> bool {
        self.hodge_degree == 2 * self.b_power as usize + self.eta.len()
            && self.weight_shift == Self::shift_of(self.b_power, &self.eta, weights)
    }

    /// E.g. `b^2*η1η2`, `1`.
    pub fn label(&self) -> String {
        let mut s = match self.b_power {
            0 => String::new(),
            1 => "b".to_string(),
            k => format!("b^{k}"),
        };
        if !self.eta.is_empty() {
            if !s.is_empty() {
                s.push('*');
            }
            for &i in &self.eta {
                s.push_str(&format!("η{}", i + 1));
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// Wedges in block order: by size, and within size 2 for three variables
/// `(η₁η₂, η₂η₃, η₃η₁)`.
fn wedges(n: usize, size: usize) -> Vec<Vec<usize>> {
    match (n, size) {
        (_, 0) => vec![vec![]],
        (_, 1) => (0..n).map(|i| vec![i]).collect(),
        (2, 2) => vec![vec![0, 1]],
        (3, 2) => vec![vec![0, 1], vec![1, 2], vec![2, 0]],
        (3, 3) => vec![vec![0, 1, 2]],
        _ => vec![],
    }
}

/// Generators of `T(p)`: the pure `b` part first, then growing wedges.
pub fn generators_in_degree(n: usize, p: usize, weights: &WeightVector) -> Vec<KoszulGenerator> {
    let mut out = Vec::new();
    for size in 0..=n.min(p) {
        if !(p - size).is_multiple_of(2) {
            continue;
        }
        let a = ((p - size) / 2) as u32;
        out.extend(wedges(n, size).into_iter().map(|s| KoszulGenerator::new(a, s, weights)));
    }
    out
}

/// Sign of the permutation sorting `v` into `target` (same elements).
fn reorder_sign(v: &[usize], target: &[usize]) -> i64 {
    let pos: Vec<usize> = v.iter().map(|x| target.iter().position(|y| y == x).expect("same set")).collect();
    let mut inversions = 0;
    for i in 0..pos.len() {
        for j in i + 1..pos.len() {
            if pos[i] > pos[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// One nonzero block of `d`: source generator, target generator, the
/// variable `j` of `∂ⱼf`, and the sign.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Block {
    source: usize,
    target: usize,
    var: usize,
    sign: i64,
}

fn blocks(source: &[KoszulGenerator], target: &[KoszulGenerator]) -> Vec<Block> {
    let mut out = Vec::new();
    for (si, g) in source.iter().enumerate() {
        let m = g.eta.len();
        for t in 0..m {
            let mut rest = g.eta.clone();
            let var = rest.remove(t);
            let sign = if (m - 1 - t) % 2 == 0 { 1 } else { -1 };
            let (ti, tg) = target
                .iter()
                .enumerate()
                .find(|(_, h)| {
                    h.b_power == g.b_power + 1 && h.eta.len() == rest.len() && rest.iter().all(|x| h.eta.contains(x))
                })
                .expect("target generator");
            out.push(Block { source: si, target: ti, var, sign: sign * reorder_sign(&rest, &tg.eta) });
        }
    }
    out
}

/// `d^(p)` restricted to internal weight `w`.
#[derive(Clone, Debug)]
pub struct DifferentialSlice {
    pub p: usize,
    pub w: i64,
    /// `(generator index in T(p), standard monomial)` per column.
    pub cols: Vec<(usize, Monomial)>,
    /// `(generator index in T(p+1), standard monomial)` per row.
    pub rows: Vec<(usize, Monomial)>,
    pub matrix: Matrix,
}

fn max_shift(gens: &[KoszulGenerator]) -> i64 {
    gens.iter().map(|g| g.weight_shift as i64).max().unwrap_or(0)
}

fn weight_window(gens: &[KoszulGenerator], bound: u64) -> (i64, i64) {
    let lo = -max_shift(gens);
    (lo, lo + bound as i64)
}

/// Weights on which `d^(p)` is needed: the windows of `p` and `p + 1`.
fn needed_weights(gens: &[Vec<KoszulGenerator>], bound: u64, p_max: usize, p: usize) -> std::ops::RangeInclusive<i64> {
    let (a, b) = weight_window(&gens[p], bound);
    let (c, d) = if p < p_max { weight_window(&gens[p + 1], bound) } else { (a, b) };
    a.min(c)..=b.max(d)
}

/// Relative weight window `B = socle + Σwᵢ + 2d`, where the socle is the
/// top weight of the Milnor algebra.
pub fn auto_bound(f: &Polynomial) -> Result<u64, KoszulError> {
    let wv = detect_weights(f)?;
    let gb = jacobian_basis(f, &MonomialOrder::lex(f.ring().nvars()))?;
    let qb = standard_monomials(&gb, None).map_err(|e| match e {
        QuotientError::InfiniteWithoutBound => QuotientError::NonIsolatedSingularity,
        other => other,
    })?;
    let socle = qb.socle_weight(&wv.weights).unwrap_or(0);
    Ok(socle + wv.sum() + 2 * u64::from(wv.degree))
}

/// The complex for `f`, with `A`'s weight slices precomputed far enough to
/// materialize `d^(p)` for `p ≤ p_max` on every weight of interest.
///
/// Degree `p` is examined on the weights `−S_p ..= −S_p + bound`, where
/// `S_p` is the largest generator shift in degree `p`; below that window
/// `T(p)` vanishes.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    f: Polynomial,
    weights: WeightVector,
    p_max: usize,
    bound: u64,
    gradient: Vec<Polynomial>,
    generators: Vec<Vec<KoszulGenerator>>,
    blocks: Vec<Vec<Block>>,
    algebra: GradedQuotient,
}

/// [`KoszulComplex::new`] with lex order on `A`.
pub fn build_complex(f: &Polynomial, p_max: usize, weight_bound: Option<u64>) -> Result<KoszulComplex, KoszulError> {
    KoszulComplex::new(f, p_max, weight_bound, &MonomialOrder::lex(f.ring().nvars()))
}

impl KoszulComplex {
    /// `weight_bound = None` selects [`auto_bound`].
    pub fn new(
        f: &Polynomial,
        p_max: usize,
        weight_bound: Option<u64>,
        order: &MonomialOrder,
    ) -> Result<Self, KoszulError> {
        let n = f.ring().nvars();
        if !(1..=3).contains(&n) {
            return Err(KoszulError::UnsupportedDimension(n));
        }
        let weights = detect_weights(f)?;
        let bound = match weight_bound {
            Some(b) => b,
            None => auto_bound(f)?,
        };
        let generators: Vec<Vec<KoszulGenerator>> =
            (0..=p_max + 2).map(|p| generators_in_degree(n, p, &weights)).collect();
        let blocks = (0..=p_max + 1).map(|p| blocks(&generators[p], &generators[p + 1])).collect();
        let top = (0..=p_max)
            .flat_map(|p| {
                let gens = &generators;
                needed_weights(gens, bound, p_max, p)
                    .flat_map(move |w| gens[p].iter().chain(&gens[p + 1]).map(move |g| w + g.weight_shift as i64))
            })
            .max()
            .unwrap_or(0)
            .max(0) as u64;
        let gb = buchberger(&Ideal::new(vec![f.clone()])?, order)?;
        let algebra = GradedQuotient::new(&gb, &weights.weights, top)?;
        Ok(Self { f: f.clone(), weights, p_max, bound, gradient: f.gradient(), generators, blocks, algebra })
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn algebra(&self) -> &GradedQuotient {
        &self.algebra
    }

    /// Generators of `T(p)` in block order; available for `p ≤ p_max + 2`.
    pub fn generators(&self, p: usize) -> &[KoszulGenerator] {
        &self.generators[p]
    }

    /// `S_p`: the largest generator shift in degree `p`.
    pub fn max_shift(&self, p: usize) -> i64 {
        max_shift(&self.generators[p])
    }

    /// The weights `−S_p ..= −S_p + bound` on which `H^p` is reported.
    pub fn weight_window(&self, p: usize) -> (i64, i64) {
        weight_window(&self.generators[p], self.bound)
    }

    fn needed_weights(&self, p: usize) -> std::ops::RangeInclusive<i64> {
        needed_weights(&self.generators, self.bound, self.p_max, p)
    }

    fn in_range(&self, p: usize, w: i64) -> bool {
        p <= self.p_max && self.needed_weights(p).contains(&w)
    }

    /// `dim T(p)_w`.
    pub fn dim(&self, p: usize, w: i64) -> Result<usize, KoszulError> {
        if p > self.p_max + 1 {
            return Err(KoszulError::OutOfRange { p, w });
        }
        self.generators[p]
            .iter()
            .map(|g| self.algebra.dim(w + g.weight_shift as i64).map_err(|_| KoszulError::OutOfRange { p, w }))
            .sum()
    }

    fn basis(&self, p: usize, w: i64) -> Result<Vec<(usize, Monomial)>, KoszulError> {
        let mut out = Vec::new();
        for (i, g) in self.generators[p].iter().enumerate() {
            let slice = self.algebra.slice(w + g.weight_shift as i64).map_err(|_| KoszulError::OutOfRange { p, w })?;
            out.extend(slice.iter().map(|m| (i, m.clone())));
        }
        Ok(out)
    }

    /// `d^(p): T(p)_w → T(p+1)_w`.
    pub fn differential_slice(&self, p: usize, w: i64) -> Result<DifferentialSlice, KoszulError> {
        if !self.in_range(p, w) {
            return Err(KoszulError::OutOfRange { p, w });
        }
        let cols = self.basis(p, w)?;
        let rows = self.basis(p + 1, w)?;
        let offsets = |gens: &[KoszulGenerator]| -> Vec<usize> {
            let mut acc = 0;
            gens.iter()
                .map(|g| {
                    let o = acc;
                    acc += self.algebra.dim(w + g.weight_shift as i64).expect("in range");
                    o
                })
                .collect()
        };
        let col_off = offsets(&self.generators[p]);
        let row_off = offsets(&self.generators[p + 1]);
        let mut matrix = Matrix::zeros(rows.len(), cols.len());
        for b in &self.blocks[p] {
            let src = w + self.generators[p][b.source].weight_shift as i64;
            let tgt = w + self.generators[p + 1][b.target].weight_shift as i64;
            let g = self.gradient[b.var].scale(&crate::poly::rat(b.sign));
            let block = self.algebra.multiplication_matrix(&g, src, tgt)?;
            matrix.set_block(row_off[b.target], col_off[b.source], &block);
        }
        Ok(DifferentialSlice { p, w, cols, rows, matrix })
    }

    /// `rank d^(p)_w` for every `p ≤ p_max` and every needed weight.
    fn ranks(&self) -> Result<BTreeMap<(usize, i64), usize>, KoszulError> {
        let keys: Vec<(usize, i64)> =
            (0..=self.p_max).flat_map(|p| self.needed_weights(p).map(move |w| (p, w))).collect();
        keys.into_par_iter().map(|(p, w)| Ok(((p, w), exact_rank(&self.differential_slice(p, w)?.matrix)))).collect()
    }

    /// Whether `d^(p+1)_w ∘ d^(p)_w = 0` on every weight where both are
    /// materialized. Returns the number of pairs checked, or the first
    /// failing `(p, w)`.
    pub fn check_d_squared(&self) -> Result<usize, (usize, i64)> {
        let pairs: Vec<(usize, i64)> = (0..self.p_max)
            .flat_map(|p| self.needed_weights(p).filter(move |&w| self.in_range(p + 1, w)).map(move |w| (p, w)))
            .collect();
        pairs
            .par_iter()
            .map(|&(p, w)| {
                let a = self.differential_slice(p, w).map_err(|_| (p, w))?;
                let b = self.differential_slice(p + 1, w).map_err(|_| (p, w))?;
                if b.matrix.mul(&a.matrix).is_zero() {
                    Ok(())
                } else {
                    Err((p, w))
                }
            })
            .collect::<Result<Vec<()>, _>>()
            .map(|v| v.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Ring};

    fn labels(c: &KoszulComplex, p: usize) -> Vec<String> {
        c.generators(p).iter().map(KoszulGenerator::label).collect()
    }

    fn complex(f: &str, n: usize, p_max: usize) -> KoszulComplex {
        build_complex(&parse_polynomial(f, &Ring::standard(n)).unwrap(), p_max, None).unwrap()
    }

    #[test]
    fn one_variable_generators() {
        let c = complex("z1^3", 1, 4);
        assert_eq!(labels(&c, 4), ["b^2"]);
        assert_eq!(labels(&c, 5), ["b^2*η1"]);
    }

    #[test]
    fn surface_generators_follow_block_order() {
        let c = complex("z1^2+z2^3+z3^5", 3, 3);
        assert_eq!(labels(&c, 2), ["b", "η1η2", "η2η3", "η3η1"]);
        assert_eq!(labels(&c, 4), ["b^2", "b*η1η2", "b*η2η3", "b*η3η1"]);
        assert_eq!(labels(&c, 3), ["b*η1", "b*η2", "b*η3", "η1η2η3"]);
        for p in 0..=5 {
            assert!(c.generators(p).iter().all(|g| g.is_consistent(c.weights()) && g.hodge_degree() == p));
        }
    }

    #[test]
    fn curve_degree_three_generators() {
        let c = complex("z1^3+z2^2", 2, 3);
        assert_eq!(labels(&c, 3), ["b*η1", "b*η2"]);
    }

    #[test]
    fn curve_even_block_matrix() {
        // d(b^{p-1} η1η2) = ∂₂f·b^p η1 − ∂₁f·b^p η2; d(b^p) = 0.
        let c = complex("z1^3+z2^2", 2, 3);
        let bl = blocks(c.generators(2), c.generators(3));
        assert_eq!(
            bl,
            [Block { source: 1, target: 1, var: 0, sign: -1 }, Block { source: 1, target: 0, var: 1, sign: 1 }]
        );
    }

    #[test]
    fn surface_top_form_column() {
        // d(η1η2η3) = ∂₁f·bη2η3 + ∂₂f·bη3η1 + ∂₃f·bη1η2.
        let c = complex("z1^2+z2^3+z3^5", 3, 3);
        let mut bl = blocks(c.generators(3), c.generators(4));
        bl.retain(|b| b.source == 3);
        bl.sort_by_key(|b| b.target);
        assert_eq!(
            bl,
            [
                Block { source: 3, target: 1, var: 2, sign: 1 },
                Block { source: 3, target: 2, var: 0, sign: 1 },
                Block { source: 3, target: 3, var: 1, sign: 1 },
            ]
        );
    }

    #[test]
    fn two_form_signs() {
        // d(η_k η_l) = −∂_k f·bη_l + ∂_l f·bη_k, including η3η1.
        let c = complex("z1^2+z2^3+z3^5", 3, 2);
        let bl = blocks(c.generators(2), c.generators(3));
        let of = |s: usize| -> Vec<(usize, usize, i64)> {
            bl.iter().filter(|b| b.source == s).map(|b| (b.target, b.var, b.sign)).collect()
        };
        assert_eq!(of(1), [(1, 0, -1), (0, 1, 1)]);
        assert_eq!(of(2), [(2, 1, -1), (1, 2, 1)]);
        assert_eq!(of(3), [(0, 2, -1), (2, 0, 1)]);
    }

    #[test]
    fn d_squared_vanishes() {
        for (f, n) in [("z1^4", 1), ("z1^2*z2+z2^4", 2), ("z1^2+z2^2*z3+z3^4", 3)] {
            let c = complex(f, n, 4);
            assert!(c.check_d_squared().unwrap() > 0);
        }
    }

    #[test]
    fn errors() {
        let r = Ring::standard(2);
        let f = parse_polynomial("z1 + z1^2", &r).unwrap();
        assert_eq!(build_complex(&f, 2, None).unwrap_err(), KoszulError::NotQuasiHomogeneous);
        let c = complex("z1^3+z2^2", 2, 2);
        assert!(matches!(c.differential_slice(3, 0), Err(KoszulError::OutOfRange { .. })));
        assert!(matches!(c.differential_slice(0, 10_000), Err(KoszulError::OutOfRange { .. })));
    }
}
