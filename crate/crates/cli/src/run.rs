use std::fmt;

use kh_core::catalog::{self, CatalogReport, Family, VerifyOptions};
use kh_core::groebner::{buchberger, ideal_membership, normal_form};
use kh_core::koszul::KoszulComplex;
use kh_core::poly::{detect_weights, parse_polynomial, MonomialOrder, Polynomial, Ring, WeightVector};
use kh_core::quotient::{hilbert_function, jacobian_basis, standard_monomials, QuotientError};
use kh_core::{GroebnerBasis, Ideal};
use serde::Serialize;

use crate::args::{Cli, Command, GensArgs, PolyArgs, RingArgs};
use crate::output::{emit, Rendered};

pub const BOUND_ENV: &str = "KH_WEIGHT_BOUND";

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit 2 with the grammar.
    Usage(String),
    /// Valid input the computation rejects: exit 2.
    Compute(String),
    Io(String),
}

impl CliError {
    pub fn io(e: impl fmt::Display) -> Self {
        CliError::Io(e.to_string())
    }

    fn compute(e: impl fmt::Display) -> Self {
        CliError::Compute(e.to_string())
    }

    pub fn is_usage(&self) -> bool {
        matches!(self, CliError::Usage(_))
    }

    pub fn code(&self) -> u8 {
        2
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => f.write_str(m),
            CliError::Io(m) => write!(f, "i/o: {m}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
        }
    }
}

fn ring(args: &RingArgs) -> Result<Ring, CliError> {
    Ring::parse(&args.vars).map_err(|e| CliError::Usage(format!("--vars: {e}")))
}

fn poly(text: &str, ring: &Ring) -> Result<Polynomial, CliError> {
    parse_polynomial(text, ring).map_err(|e| CliError::Usage(format!("`{}`: {e}", text.trim())))
}

fn gens(args: &GensArgs, ring: &Ring) -> Result<Vec<Polynomial>, CliError> {
    let out: Vec<Polynomial> =
        args.gens.split(';').filter(|s| !s.trim().is_empty()).map(|s| poly(s, ring)).collect::<Result<_, _>>()?;
    if out.is_empty() {
        return Err(CliError::Usage("--gens: no generators".into()));
    }
    Ok(out)
}

fn weights(args: &RingArgs, ring: &Ring) -> Result<Option<Vec<u32>>, CliError> {
    let Some(s) = &args.weights else { return Ok(None) };
    let w: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().ok().filter(|&v| v > 0))
        .collect::<Option<_>>()
        .ok_or_else(|| CliError::Usage(format!("--weights: expected positive integers, got `{s}`")))?;
    if w.len() != ring.nvars() {
        return Err(CliError::Usage(format!("--weights: {} weights for {} variables", w.len(), ring.nvars())));
    }
    Ok(Some(w))
}

/// `lex` or `wlex`, optionally followed by `:` and a precedence `z3>z1>z2`.
fn order(args: &RingArgs, ring: &Ring) -> Result<MonomialOrder, CliError> {
    let usage = |m: String| CliError::Usage(format!("--order: {m}"));
    let (kind, prec) = match args.order.split_once(':') {
        Some((k, p)) => (k.trim(), Some(p)),
        None => (args.order.trim(), None),
    };
    let precedence: Vec<usize> = match prec {
        None => (0..ring.nvars()).collect(),
        Some(p) => p
            .split('>')
            .map(|v| ring.index_of(v.trim()).ok_or_else(|| usage(format!("unknown variable `{}`", v.trim()))))
            .collect::<Result<_, _>>()?,
    };
    match kind {
        "lex" => MonomialOrder::lex_with_precedence(&precedence).map_err(|e| usage(e.to_string())),
        "wlex" => {
            let w = weights(args, ring)?.ok_or_else(|| usage("wlex needs --weights".into()))?;
            MonomialOrder::weighted_lex(&w, &precedence).map_err(|e| usage(e.to_string()))
        }
        other => Err(usage(format!("unknown order `{other}`"))),
    }
}

fn order_label(order: &MonomialOrder, ring: &Ring) -> String {
    let prec: Vec<&str> = order.precedence().iter().map(|&i| ring.names()[i].as_str()).collect();
    match order.weights() {
        None => format!("lex {}", prec.join(">")),
        Some(w) => {
            format!("wlex ({}) {}", w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","), prec.join(">"))
        }
    }
}

/// `auto` defers to the environment, then to the automatic rule.
fn bound(text: &str) -> Result<Option<u64>, CliError> {
    let parse = |s: &str, what: &str| {
        s.trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{what}: expected `auto` or an integer, got `{s}`")))
    };
    if text.trim() != "auto" {
        return parse(text, "--bound");
    }
    match std::env::var(BOUND_ENV) {
        Ok(v) if v.trim() != "auto" => parse(&v, BOUND_ENV),
        _ => Ok(None),
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn indexed(items: &[String]) -> Vec<Vec<String>> {
    items.iter().enumerate().map(|(i, s)| vec![i.to_string(), s.clone()]).collect()
}

fn groebner(args: &GensArgs) -> Result<(Ring, MonomialOrder, GroebnerBasis), CliError> {
    let r = ring(&args.ring)?;
    let o = order(&args.ring, &r)?;
    let ideal = Ideal::new(gens(args, &r)?).map_err(|e| CliError::Usage(e.to_string()))?;
    let gb = buchberger(&ideal, &o).map_err(CliError::compute)?;
    Ok((r, o, gb))
}

#[derive(Serialize)]
struct GbReport {
    order: String,
    generators: Vec<String>,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct NfReport {
    polynomial: String,
    basis: Vec<String>,
    quotients: Vec<String>,
    remainder: String,
}

#[derive(Serialize)]
struct MemberReport {
    polynomial: String,
    member: bool,
    remainder: String,
}

#[derive(Serialize)]
struct QuotientReport {
    basis: Vec<String>,
    finite: bool,
    dimension: Option<usize>,
    weights: Option<Vec<u32>>,
    bound: Option<u64>,
    monomials: Vec<String>,
}

#[derive(Serialize)]
struct MilnorReport {
    f: String,
    milnor: usize,
    monomials: Vec<String>,
}

pub fn run(cli: &Cli) -> Result<Status, CliError> {
    let (rendered, status) = match &cli.command {
        Command::Gb(args) => (gb(args)?, Status::Ok),
        Command::Nf { gens, poly: p } => (nf(gens, p)?, Status::Ok),
        Command::Member { gens, poly: p } => (member(gens, p)?, Status::Ok),
        Command::Quotient { gens, bound } => (quotient(gens, *bound)?, Status::Ok),
        Command::Basis(args) => (milnor(args, true)?, Status::Ok),
        Command::Milnor(args) => (milnor(args, false)?, Status::Ok),
        Command::Hilbert { gens, bound } => (hilbert(gens, *bound)?, Status::Ok),
        Command::Cohomology { poly: p, pmax, bound: b, case } => {
            (cohomology(p, *pmax, b, case.as_deref(), cli.out.verbose)?, Status::Ok)
        }
        Command::VerifyCatalog { family, param, all, pmax, bound: b } => {
            let report = verify(family.as_deref(), param, *all, *pmax, b)?;
            let status = if report.pass { Status::Ok } else { Status::CheckFailed };
            (render_catalog(&report, cli.out.verbose), status)
        }
    };
    emit(&rendered, &cli.out)?;
    Ok(status)
}

fn gb(args: &GensArgs) -> Result<Rendered, CliError> {
    let (r, o, gb) = groebner(args)?;
    let basis = strings(gb.elements());
    let text = braces(&basis);
    let rows = indexed(&basis);
    let report = GbReport { order: order_label(&o, &r), generators: strings(gb.source().generators()), basis };
    Ok(Rendered::new(&report, vec!["index", "polynomial"], rows, text))
}

fn nf(args: &GensArgs, p: &str) -> Result<Rendered, CliError> {
    let (r, o, gb) = groebner(args)?;
    let p = poly(p, &r)?;
    let div = normal_form(&p, gb.elements(), &o).map_err(CliError::compute)?;
    let report = NfReport {
        polynomial: p.to_string(),
        basis: strings(gb.elements()),
        quotients: strings(&div.quotients),
        remainder: div.remainder.to_string(),
    };
    let rows = vec![vec!["remainder".into(), report.remainder.clone()]];
    let text = report.remainder.clone();
    Ok(Rendered::new(&report, vec!["field", "value"], rows, text))
}

fn member(args: &GensArgs, p: &str) -> Result<Rendered, CliError> {
    let (r, _, gb) = groebner(args)?;
    let p = poly(p, &r)?;
    let report = MemberReport {
        polynomial: p.to_string(),
        member: ideal_membership(&p, &gb),
        remainder: gb.reduce(&p).to_string(),
    };
    let rows = vec![vec![report.polynomial.clone(), report.member.to_string()]];
    let text = report.member.to_string();
    Ok(Rendered::new(&report, vec!["polynomial", "member"], rows, text))
}

fn quotient(args: &GensArgs, bound: Option<u64>) -> Result<Rendered, CliError> {
    let (r, _, gb) = groebner(args)?;
    let w = weights(&args.ring, &r)?.unwrap_or_else(|| vec![1; r.nvars()]);
    let qb = match standard_monomials(&gb, None) {
        Ok(qb) => qb,
        Err(QuotientError::InfiniteWithoutBound) => {
            let b =
                bound.ok_or_else(|| CliError::Usage("the quotient is infinite-dimensional; pass --bound".into()))?;
            standard_monomials(&gb, Some((&w, b))).map_err(CliError::compute)?
        }
        Err(e) => return Err(CliError::compute(e)),
    };
    let monomials = qb.to_strings();
    let text = match qb.dimension() {
        Some(d) => format!("dimension {d}\n{}", braces(&monomials)),
        None => format!(
            "infinite; {} standard monomials of weight <= {}\n{}",
            monomials.len(),
            bound.unwrap_or(0),
            braces(&monomials)
        ),
    };
    let rows = indexed(&monomials);
    let report = QuotientReport {
        basis: strings(gb.elements()),
        finite: qb.is_finite(),
        dimension: qb.dimension(),
        weights: qb.bound().map(|(w, _)| w.to_vec()),
        bound: qb.bound().map(|(_, b)| b),
        monomials,
    };
    Ok(Rendered::new(&report, vec!["index", "monomial"], rows, text))
}

fn milnor(args: &PolyArgs, list: bool) -> Result<Rendered, CliError> {
    let r = ring(&args.ring)?;
    let o = order(&args.ring, &r)?;
    let f = poly(&args.poly, &r)?;
    let gb = jacobian_basis(&f, &o).map_err(CliError::compute)?;
    let qb = standard_monomials(&gb, None).map_err(|e| match e {
        QuotientError::InfiniteWithoutBound => CliError::compute(QuotientError::NonIsolatedSingularity),
        e => CliError::compute(e),
    })?;
    let report = MilnorReport { f: f.to_string(), milnor: qb.monomials().len(), monomials: qb.to_strings() };
    if list {
        let rows = indexed(&report.monomials);
        let text = braces(&report.monomials);
        Ok(Rendered::new(&report, vec!["index", "monomial"], rows, text))
    } else {
        let rows = vec![vec![report.f.clone(), report.milnor.to_string()]];
        let text = report.milnor.to_string();
        Ok(Rendered::new(&report, vec!["f", "milnor"], rows, text))
    }
}

fn hilbert(args: &GensArgs, bound: u64) -> Result<Rendered, CliError> {
    let (r, _, gb) = groebner(args)?;
    let wv = match weights(&args.ring, &r)? {
        Some(w) => {
            let d = gb.source().generators()[0].homogeneous_weight(&w).filter(|&d| d > 0).unwrap_or(1);
            WeightVector::new(w, u32::try_from(d).map_err(CliError::compute)?)
        }
        None => match gb.source().generators() {
            [f] => detect_weights(f).map_err(CliError::compute)?,
            _ => return Err(CliError::Usage("--weights is required for more than one generator".into())),
        },
    };
    let h = hilbert_function(&gb, &wv, bound).map_err(CliError::compute)?;
    let rows = h.values.iter().enumerate().map(|(w, v)| vec![w.to_string(), v.to_string()]).collect();
    let text = h.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    Ok(Rendered::new(&h, vec!["weight", "dimension"], rows, text))
}

fn cohomology(args: &PolyArgs, pmax: usize, b: &str, case: Option<&str>, verbose: bool) -> Result<Rendered, CliError> {
    let r = ring(&args.ring)?;
    let o = order(&args.ring, &r)?;
    let f = poly(&args.poly, &r)?;
    let c = KoszulComplex::new(&f, pmax, bound(b)?, &o).map_err(CliError::compute)?;
    let mut report = c.cohomology(None).map_err(CliError::compute)?;
    report.case = case.map_or_else(|| report.f.clone(), str::to_string);
    if !verbose {
        report.slices.clear();
    }
    let mut rows = Vec::new();
    let mut text = format!("{}  f = {}  weights {}  bound {}\n", report.case, report.f, report.weights, report.bound);
    for d in &report.degrees {
        for (i, h) in d.hilbert.iter().enumerate() {
            rows.push(vec![d.p.to_string(), (d.weight_min + i as i64).to_string(), h.to_string()]);
        }
        let verdict = if d.finite { "finite" } else { "infinite" };
        text.push_str(&format!(
            "H^{}  total {:>4}  {:<8}  w {}..{}\n",
            d.p,
            d.total,
            verdict,
            d.weight_min,
            d.weight_max()
        ));
        if verbose {
            let h: Vec<String> = d.hilbert.iter().map(|x| x.to_string()).collect();
            text.push_str(&format!("      {}\n", h.join(" ")));
        }
    }
    Ok(Rendered::new(&report, vec!["p", "weight", "dimension"], rows, text))
}

fn verify(family: Option<&str>, params: &[u32], all: bool, pmax: usize, b: &str) -> Result<CatalogReport, CliError> {
    let fam = match family {
        Some(id) => Some(
            Family::from_id(id)
                .ok_or_else(|| CliError::Usage(catalog::CatalogError::UnknownFamily(id.into()).to_string()))?,
        ),
        None => None,
    };
    if fam.is_none() && !params.is_empty() {
        return Err(CliError::Usage("--param needs --family".into()));
    }
    debug_assert!(!(all && fam.is_some()));
    let entries = catalog::select(fam, params).map_err(|e| CliError::Usage(e.to_string()))?;
    let opts = VerifyOptions { p_max: pmax, bound: bound(b)? };
    Ok(catalog::verify_all(&entries, &opts))
}

/// Short cohomology cell: the finite total or `inf`.
fn cell(o: &catalog::VerificationOutcome, p: usize) -> String {
    match o.check(&format!("H^{p}")) {
        Some(c) if c.computed.starts_with("infinite") => "inf".into(),
        Some(c) => c.computed.clone(),
        None => "-".into(),
    }
}

fn render_catalog(report: &CatalogReport, verbose: bool) -> Rendered {
    let mut rows = Vec::new();
    for e in &report.entries {
        for c in &e.checks {
            rows.push(vec![
                e.id.clone(),
                e.family.clone(),
                e.param.map(|p| p.to_string()).unwrap_or_default(),
                c.name.clone(),
                c.expected.clone(),
                c.computed.clone(),
                c.pass.to_string(),
                c.note.clone().unwrap_or_default(),
            ]);
        }
    }
    let pmax = report
        .entries
        .first()
        .map(|e| e.checks.iter().filter(|c| c.name.starts_with("H^")).count().saturating_sub(1))
        .unwrap_or(0);
    let even = (0..=pmax).rev().find(|p| p % 2 == 0 && *p >= 2);
    let odd = (0..=pmax).rev().find(|p| p % 2 == 1 && *p >= 3);
    let mut text = format!(
        "{:<16} {:>5} {:>5} {:>5} {:>6} {:>8}  {:>7}  verdict\n",
        "entry", "H^0", "H^1", "H^2", "H^2p", "H^2p+1", "checks"
    );
    for e in &report.entries {
        let passed = e.checks.iter().filter(|c| c.pass).count();
        let top = |p: Option<usize>| p.map_or_else(|| "-".to_string(), |p| cell(e, p));
        text.push_str(&format!(
            "{:<16} {:>5} {:>5} {:>5} {:>6} {:>8}  {:>7}  {}\n",
            e.id,
            cell(e, 0),
            cell(e, 1),
            cell(e, 2),
            top(even),
            top(odd),
            format!("{passed}/{}", e.checks.len()),
            if e.pass { "pass" } else { "FAIL" }
        ));
        for c in &e.checks {
            if !c.pass || verbose {
                text.push_str(&format!(
                    "    {} {}: expected {}, computed {}\n",
                    if c.pass { "ok  " } else { "FAIL" },
                    c.name,
                    c.expected,
                    c.computed
                ));
            }
            if let (Some(n), true) = (&c.note, verbose || !c.pass) {
                text.push_str(&format!("         note: {n}\n"));
            }
        }
    }
    text.push_str(if report.pass { "all checks pass\n" } else { "some checks FAILED\n" });
    Rendered::new(report, vec!["entry", "family", "param", "check", "expected", "computed", "pass", "note"], rows, text)
}
