//! Individual checks run against a catalog entry.

use std::fmt::Display;

use crate::groebner::{buchberger, ideal_membership, ideal_quotient, GroebnerBasis, Ideal};
use crate::koszul::{build_complex, CohomologyReport, Expectation};
use crate::linalg::{exact_rank, Matrix};
use crate::poly::{detect_weights, Monomial, MonomialOrder, Polynomial, WeightVector};
use crate::quotient::{jacobian_basis, milnor_number, principal_series, standard_monomials, GradedQuotient};

use super::families::{AnnihilatorCase, BasisListing, CatalogEntry, GroebnerListing};
use super::{Check, VerifyOptions};

fn lex(f: &Polynomial) -> MonomialOrder {
    MonomialOrder::lex(f.ring().nvars())
}

fn failed(name: &str, expected: impl Display, err: impl Display) -> Check {
    Check::new(name, expected, format!("error: {err}"), false)
}

pub(super) fn quasi_homogeneous(e: &CatalogEntry) -> (Check, Option<WeightVector>) {
    match detect_weights(&e.f) {
        Ok(wv) => {
            let ok = wv.is_satisfied_by(&e.f);
            (Check::new("quasi_homogeneous", "positive weights", &wv, ok), Some(wv))
        }
        Err(err) => (failed("quasi_homogeneous", "positive weights", err), None),
    }
}

pub(super) fn milnor(name: &str, f: &Polynomial, expected: u64) -> Check {
    match milnor_number(f) {
        Ok(mu) => Check::new(name, expected, mu, mu as u64 == expected),
        Err(err) => failed(name, expected, err),
    }
}

/// The listed monomials are independent in `ℚ[z]/J(f)` and as many as its
/// dimension.
pub(super) fn basis_listing(name: &str, f: &Polynomial, listing: &BasisListing) -> Check {
    let ring = f.ring();
    let shown: Vec<String> = listing.monomials.iter().map(|m| m.display(ring).to_string()).collect();
    let expected = format!("basis {{{}}}", shown.join(", "));
    let run = || -> Result<(usize, usize, Vec<String>), crate::quotient::QuotientError> {
        let gb = jacobian_basis(f, &lex(f))?;
        let qb = standard_monomials(&gb, None)?;
        let std: Vec<&Monomial> = qb.monomials().iter().collect();
        let cols = listing
            .monomials
            .iter()
            .map(|m| {
                let r = gb.reduce(&Polynomial::monomial(ring, m.clone(), crate::poly::rat(1)));
                std.iter().map(|s| r.coefficient(s)).collect()
            })
            .collect();
        let rank = exact_rank(&Matrix::from_columns(std.len(), cols));
        Ok((rank, std.len(), qb.to_strings()))
    };
    match run() {
        Ok((rank, dim, computed)) => {
            let n = listing.monomials.len();
            match &listing.dimension_only {
                Some(why) => Check::new(
                    name,
                    format!("dimension {n}"),
                    format!("dimension {dim}, basis {{{}}}", computed.join(", ")),
                    n == dim,
                )
                .with_note(why.clone()),
                None => {
                    let computed = format!("{n} listed, rank {rank}, dimension {dim}");
                    Check::new(name, expected, computed, rank == n && n == dim)
                }
            }
        }
        Err(err) => failed(name, expected, err),
    }
}

pub(super) fn euler(f: &Polynomial) -> Check {
    match jacobian_basis(f, &lex(f)) {
        Ok(gb) => {
            let ok = ideal_membership(f, &gb);
            Check::new("euler", "f in <d1f..dnf>", if ok { "member" } else { "not a member" }, ok)
        }
        Err(err) => failed("euler", "f in <d1f..dnf>", err),
    }
}

fn reduced_basis(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, crate::groebner::GroebnerError> {
    buchberger(&Ideal::new(gens.to_vec())?, order)
}

fn listed(ps: &[Polynomial]) -> String {
    format!("[{}]", ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
}

/// The listed polynomials are, up to scaling, the reduced lex basis.
pub(super) fn groebner_listing(g: &GroebnerListing) -> Check {
    let name = format!("groebner:{}", g.name);
    let expected = listed(&g.listed);
    match reduced_basis(&g.generators, &lex(&g.generators[0])) {
        Ok(gb) => {
            let order = gb.order().clone();
            let mut want: Vec<Polynomial> = g.listed.iter().map(|p| p.monic(&order)).collect();
            let mut got = gb.elements().to_vec();
            want.sort_by_key(|a| a.to_string());
            got.sort_by_key(|a| a.to_string());
            Check::new(&name, expected, listed(gb.elements()), want == got)
        }
        Err(err) => failed(&name, expected, err),
    }
}

pub(super) fn annihilator(a: &AnnihilatorCase) -> Check {
    let name = format!("annihilator:{}", a.name);
    let expected = listed(&a.expected);
    let order = lex(&a.g);
    let run = || -> Result<(GroebnerBasis, GroebnerBasis), crate::groebner::GroebnerError> {
        Ok((ideal_quotient(&Ideal::new(a.j.clone())?, &a.g, &order)?, reduced_basis(&a.expected, &order)?))
    };
    match run() {
        Ok((got, want)) => Check::new(&name, expected, listed(got.elements()), got == want),
        Err(err) => failed(&name, expected, err),
    }
}

pub(super) fn invariant_relation(table: &Polynomial, inv: &[Polynomial; 3]) -> Check {
    let expected = "f(e1,e2,e3) = 0";
    match table.substitute(inv) {
        Ok(r) => Check::new("invariant_relation", expected, format!("f(e1,e2,e3) = {r}"), r.is_zero()),
        Err(err) => failed("invariant_relation", expected, err),
    }
}

pub(super) fn presentations_agree(table: &Polynomial, f: &Polynomial) -> Check {
    match (milnor_number(table), milnor_number(f)) {
        (Ok(a), Ok(b)) => Check::new("presentations_agree", format!("mu(table) = mu(f) = {b}"), a, a == b),
        (Err(err), _) | (_, Err(err)) => failed("presentations_agree", "equal Milnor numbers", err),
    }
}

/// `μ` under a weighted order agrees with lex.
pub(super) fn order_independence(f: &Polynomial, wv: &WeightVector, mu: u64) -> Check {
    let n = f.ring().nvars();
    let prec: Vec<usize> = (0..n).collect();
    let run = || -> Result<usize, crate::quotient::QuotientError> {
        let order = MonomialOrder::weighted_lex(&wv.weights, &prec)?;
        Ok(standard_monomials(&jacobian_basis(f, &order)?, None)?.monomials().len())
    };
    match run() {
        Ok(got) => Check::new("order_independence", mu, got, got as u64 == mu),
        Err(err) => failed("order_independence", mu, err),
    }
}

/// Expected shape of `H^p`: infinite below the dimension of the ambient
/// space, `μ` from there on.
pub fn expected_cohomology(nvars: usize, mu: u64, p_max: usize) -> Vec<Expectation> {
    (0..=p_max).map(|p| if p < nvars { Expectation::Infinite } else { Expectation::Finite(mu) }).collect()
}

/// Weight Hilbert function of the Milnor algebra, `0..=top`.
fn milnor_hilbert(f: &Polynomial, wv: &WeightVector) -> Result<Vec<u64>, String> {
    let gb = jacobian_basis(f, &lex(f)).map_err(|e| e.to_string())?;
    let qb = standard_monomials(&gb, None).map_err(|e| e.to_string())?;
    let top = qb.socle_weight(&wv.weights).unwrap_or(0) as usize;
    let mut h = vec![0u64; top + 1];
    for m in qb.monomials() {
        h[m.weighted_degree(&wv.weights) as usize] += 1;
    }
    Ok(h)
}

/// Lookup into a Hilbert function, zero outside its support.
fn at(h: &[u64], w: i64) -> i64 {
    usize::try_from(w).ok().and_then(|i| h.get(i)).map_or(0, |&x| x as i64)
}

pub(super) fn cohomology(e: &CatalogEntry, wv: &WeightVector, opts: &VerifyOptions) -> Vec<Check> {
    let n = e.f.ring().nvars();
    let exp = expected_cohomology(n, e.expected_milnor, opts.p_max);
    let report = build_complex(&e.f, opts.p_max, opts.bound).and_then(|c| {
        let d2 = c.check_d_squared();
        Ok((c.cohomology(Some(&exp))?, d2))
    });
    let (report, d2) = match report {
        Ok(r) => r,
        Err(err) => return (0..=opts.p_max).map(|p| failed(&format!("H^{p}"), exp[p], &err)).collect(),
    };
    let mut out: Vec<Check> = report
        .degrees
        .iter()
        .map(|d| {
            let computed = if d.finite { d.total.to_string() } else { format!("infinite ({} on the window)", d.total) };
            let c = Check::new(&format!("H^{}", d.p), exp[d.p], computed, d.pass == Some(true));
            match (&e.h2_note, d.p) {
                (Some(note), 2) => c.with_note(note.clone()),
                _ => c,
            }
        })
        .collect();
    out.push(match d2 {
        Ok(count) => Check::new("d_squared", "d∘d = 0", format!("{count} slices vanish"), true),
        Err((p, w)) => Check::new("d_squared", "d∘d = 0", format!("nonzero at p={p}, w={w}"), false),
    });
    match milnor_hilbert(&e.f, wv) {
        Ok(m) => out.extend(slice_checks(&report, wv, &m, e.expected_milnor)),
        Err(err) => out.push(failed("H0_hilbert", "Hilbert functions", err)),
    }
    out
}

fn slice_checks(r: &CohomologyReport, wv: &WeightVector, m: &[u64], mu: u64) -> Vec<Check> {
    let n = wv.weights.len();
    let d = i64::from(wv.degree);
    let sw = wv.sum() as i64;
    let top = r.degrees.iter().map(|x| x.weight_max()).max().unwrap_or(0);
    let a = principal_series(wv, (top + sw + d).max(0) as u64);
    let a = |w: i64| at(&a, w);
    let m = |w: i64| at(m, w);
    let mut out = Vec::new();

    let compare = |name: &str, p: usize, formula: &str, f: &dyn Fn(i64) -> i64| -> Option<Check> {
        let deg = r.degrees.get(p)?;
        let bad: Vec<i64> = (deg.weight_min..=deg.weight_max()).filter(|&w| deg.at(w) as i64 != f(w)).collect();
        let computed = match bad.first() {
            None => format!("{} weights agree", deg.hilbert.len()),
            Some(w) => format!("differs at w={w}: {} vs {}", deg.at(*w), f(*w)),
        };
        Some(Check::new(name, formula, computed, bad.is_empty()))
    };

    out.extend(compare("H0_hilbert", 0, "dim H^0_w = A(w)", &|w| a(w)));
    if n == 2 {
        out.extend(compare("H1_slices", 1, "dim H^1_w = A(w+|w|-d) + M(w)", &|w| a(w + sw - d) + m(w)));
    }
    if n == 3 {
        out.extend(compare("H1_slices", 1, "dim H^1_w = sum_i A(u-w_i) - A(u-d) + M(w), u = w+|w|-d", &|w| {
            let u = w + sw - d;
            wv.weights.iter().map(|&wi| a(u - i64::from(wi))).sum::<i64>() - a(u - d) + m(w)
        }));
        out.extend(compare("H2_slices", 2, "dim H^2_w = A(w+|w|-d) + M(w+d)", &|w| a(w + sw - d) + m(w + d)));
    }
    // On a curve A's Hilbert function is bounded, so only surfaces grow.
    if let Some(h1) = r.degrees.get(1).filter(|_| n == 3) {
        let band = wv.degree as usize;
        let len = h1.hilbert.len();
        let last: u64 = h1.hilbert[len.saturating_sub(band)..].iter().sum();
        let prev: u64 = h1.hilbert[len.saturating_sub(2 * band)..len.saturating_sub(band)].iter().sum();
        let ok = last > 0 && last >= prev && h1.total > mu;
        out.push(Check::new(
            "H1_growing",
            format!("top band > 0, nondecreasing, total > {mu}"),
            format!("bands {prev} then {last}, total {}", h1.total),
            ok,
        ));
    }
    out
}

/// Outcome of the isomorphism `P ↦ z_i P` from `ℚ[z]/J(f)` onto the
/// solutions of `g ∂_i f = 0` in `ℚ[z]/⟨f, ∂_j f, ∂_k f⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkOutcome {
    pub index: usize,
    /// Rank of `P ↦ z_i P` summed over all weights.
    pub rank: usize,
    /// Dimension of the solution space summed over all weights.
    pub solutions: usize,
    pub images_solve: bool,
    pub isomorphism: bool,
}

/// Checks the map for variable `i` (0-based) of a quasi-homogeneous `f` in
/// three variables.
pub fn remark_map(f: &Polynomial, i: usize) -> Result<RemarkOutcome, String> {
    let n = f.ring().nvars();
    if n != 3 || i >= n {
        return Err(format!("needs three variables and i < 3, got {n} and {i}"));
    }
    let grad = f.gradient();
    if grad[i].is_zero() {
        return Err(format!("d{}f vanishes", i + 1));
    }
    let wv = detect_weights(f).map_err(|e| e.to_string())?;
    let d = u64::from(wv.degree);
    let wi = u64::from(wv.weights[i]);
    let order = lex(f);
    let jac = jacobian_basis(f, &order).map_err(|e| e.to_string())?;
    let socle = standard_monomials(&jac, None).map_err(|e| e.to_string())?.socle_weight(&wv.weights).unwrap_or(0);
    let top = socle + wi + d;
    let milnor = GradedQuotient::new(&jac, &wv.weights, top).map_err(|e| e.to_string())?;
    let mut gens = vec![f.clone()];
    gens.extend((0..n).filter(|&j| j != i).map(|j| grad[j].clone()));
    let qgb = reduced_basis(&gens, &order).map_err(|e| e.to_string())?;
    let q = GradedQuotient::new(&qgb, &wv.weights, top + d).map_err(|e| e.to_string())?;
    let zi = Polynomial::var(f.ring(), i).map_err(|e| e.to_string())?;
    let mut out = RemarkOutcome { index: i, rank: 0, solutions: 0, images_solve: true, isomorphism: true };
    for v in 0..=top as i64 {
        let src = v - wi as i64;
        let mul = q.multiplication_matrix(&grad[i], v, v + d as i64 - wi as i64).map_err(|e| e.to_string())?;
        let kernel = q.dim(v).map_err(|e| e.to_string())? - exact_rank(&mul);
        let cols = milnor
            .slice(src)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|m| {
                let p = Polynomial::monomial(f.ring(), m.clone(), crate::poly::rat(1));
                q.coordinates(&(&p * &zi), v)
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let image = Matrix::from_columns(q.dim(v).map_err(|e| e.to_string())?, cols);
        let rank = exact_rank(&image);
        let msrc = milnor.dim(src).map_err(|e| e.to_string())?;
        out.rank += rank;
        out.solutions += kernel;
        if image.cols() > 0 && !mul.mul(&image).is_zero() {
            out.images_solve = false;
        }
        if rank != msrc || kernel != msrc {
            out.isomorphism = false;
        }
    }
    Ok(out)
}

/// Searches for a variable for which the map is an isomorphism.
pub(super) fn remark(f: &Polynomial, mu: u64) -> Check {
    let expected = format!("some i with z_i: M -> solutions an isomorphism of rank {mu}");
    let mut seen = Vec::new();
    for i in 0..3 {
        match remark_map(f, i) {
            Ok(o) if o.isomorphism && o.images_solve && o.rank as u64 == mu => {
                return Check::new("remark", expected, format!("i={}, rank {}", i + 1, o.rank), true);
            }
            Ok(o) => seen.push(format!("i={}: rank {}, solutions {}", i + 1, o.rank, o.solutions)),
            Err(err) => seen.push(format!("i={}: {err}", i + 1)),
        }
    }
    Check::new("remark", expected, seen.join("; "), false)
}
