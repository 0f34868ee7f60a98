//! Encoded ADE singularities and their verification.
//!
//! Every entry carries the values to be reproduced: Milnor numbers and
//! bases, printed Gröbner bases, annihilators, invariant relations and the
//! expected shape of the Koszul cohomology. [`verify_entry`] recomputes each
//! of them and reports one [`Check`] per item.

mod checks;
mod families;

use std::fmt::Display;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use checks::{expected_cohomology, remark_map, RemarkOutcome};
pub use families::{
    entry, separated_curve, separated_curve_annihilator, separated_surface, separated_surface_annihilator,
    AnnihilatorCase, BasisListing, CatalogEntry, Family, GroebnerListing, MAX_PARAM,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{0} needs a parameter")]
    MissingParam(Family),
    #[error("{0} takes no parameter")]
    UnexpectedParam(Family),
    #[error("{family} parameter {param} outside {min}..={max}")]
    ParamOutOfRange { family: Family, param: u32, min: u32, max: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: &str, expected: impl Display, computed: impl Display, pass: bool) -> Self {
        Check {
            name: name.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            note: None,
        }
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationOutcome {
    pub id: String,
    pub family: String,
    pub param: Option<u32>,
    pub f: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerificationOutcome {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<VerificationOutcome>,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Highest cohomological degree examined.
    pub p_max: usize,
    /// Relative weight window; `None` picks it automatically.
    pub bound: Option<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { p_max: 5, bound: None }
    }
}

/// Entries to verify: one family at the given parameters (or its default
/// sweep), or every family.
pub fn select(family: Option<Family>, params: &[u32]) -> Result<Vec<CatalogEntry>, CatalogError> {
    let families: Vec<Family> = family.map_or_else(|| Family::ALL.to_vec(), |f| vec![f]);
    let mut out = Vec::new();
    for fam in families {
        let ps: Vec<Option<u32>> = if params.is_empty() || fam.min_param().is_none() {
            fam.default_params()
        } else {
            params.iter().map(|&p| Some(p)).collect()
        };
        for p in ps {
            out.push(entry(fam, p)?);
        }
    }
    Ok(out)
}

pub fn verify_entry(e: &CatalogEntry, opts: &VerifyOptions) -> VerificationOutcome {
    let mut out = Vec::new();
    let (qh, wv) = checks::quasi_homogeneous(e);
    out.push(qh);
    out.push(checks::milnor("milnor", &e.f, e.expected_milnor));
    if let Some(l) = &e.milnor_listing {
        out.push(checks::basis_listing("milnor_basis", &e.f, l));
    }
    out.push(checks::euler(&e.f));
    out.extend(e.groebner_listings.iter().map(checks::groebner_listing));
    out.extend(e.annihilators.iter().map(checks::annihilator));
    if let Some(t) = &e.table_form {
        if let Some(inv) = &e.invariants {
            out.push(checks::invariant_relation(t, inv));
        }
        if let Some(mu) = e.table_milnor {
            out.push(checks::milnor("table_milnor", t, mu));
        }
        if let Some(l) = &e.table_listing {
            out.push(checks::basis_listing("table_basis", t, l));
        }
        out.push(checks::presentations_agree(t, &e.f));
    }
    if let Some(wv) = &wv {
        out.push(checks::order_independence(&e.f, wv, e.expected_milnor));
        out.extend(checks::cohomology(e, wv, opts));
    }
    if e.family.is_surface() {
        out.push(checks::remark(&e.f, e.expected_milnor));
    }
    let pass = out.iter().all(|c| c.pass);
    VerificationOutcome {
        id: e.id(),
        family: e.family.id().to_string(),
        param: e.param,
        f: e.f.to_string(),
        checks: out,
        pass,
    }
}

/// Verifies entries in parallel; the report keeps the input order.
pub fn verify_all(entries: &[CatalogEntry], opts: &VerifyOptions) -> CatalogReport {
    let entries: Vec<VerificationOutcome> = entries.par_iter().map(|e| verify_entry(e, opts)).collect();
    let pass = entries.iter().all(|e| e.pass);
    CatalogReport { entries, pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: Family, p: Option<u32>) -> VerificationOutcome {
        verify_entry(&entry(f, p).unwrap(), &VerifyOptions::default())
    }

    fn failing(o: &VerificationOutcome) -> Vec<&str> {
        o.failures().map(|c| c.name.as_str()).collect()
    }

    #[test]
    fn exceptional_entries_pass() {
        for f in
            [Family::E6Curve, Family::E7Curve, Family::E8Curve, Family::E6Surface, Family::E7Surface, Family::E8Surface]
        {
            let o = run(f, None);
            assert!(o.pass, "{f}: {:?}", failing(&o));
        }
    }

    #[test]
    fn a_and_d_curves_pass() {
        for k in [1, 2, 5] {
            let o = run(Family::ACurve, Some(k));
            assert!(o.pass, "A{k}: {:?} {:?}", failing(&o), o.check("H1_growing"));
        }
        let o = run(Family::DCurve, Some(6));
        assert!(o.pass, "{:?} {:?}", failing(&o), o.check("H1_growing"));
    }

    #[test]
    fn d_surface_table_disagrees_with_section() {
        let o = run(Family::DSurface, Some(4));
        assert_eq!(failing(&o), ["table_milnor", "table_basis"]);
        assert!(o.check("presentations_agree").unwrap().pass);
    }

    #[test]
    fn a_surface_table_is_dimension_only() {
        let o = run(Family::ASurface, Some(4));
        assert!(o.pass, "{:?}", failing(&o));
        assert!(o.check("table_basis").unwrap().note.is_some());
    }

    #[test]
    fn parameters_are_validated() {
        assert_eq!(
            entry(Family::DCurve, Some(3)).unwrap_err(),
            CatalogError::ParamOutOfRange { family: Family::DCurve, param: 3, min: 4, max: MAX_PARAM }
        );
        assert_eq!(entry(Family::E6Curve, Some(1)).unwrap_err(), CatalogError::UnexpectedParam(Family::E6Curve));
        assert_eq!(entry(Family::ASurface, None).unwrap_err(), CatalogError::MissingParam(Family::ASurface));
        assert_eq!(Family::from_id("e7-SURFACE"), Some(Family::E7Surface));
    }

    #[test]
    fn remark_rejects_a_vanishing_multiplier() {
        let f = crate::poly::parse_polynomial("z1^2+z2^2", &crate::poly::Ring::standard(3)).unwrap();
        assert!(remark_map(&f, 2).unwrap_err().contains("vanishes"));
    }

    #[test]
    fn selection_sweeps_defaults() {
        let all = select(None, &[]).unwrap();
        assert_eq!(all.len(), 8 + 5 + 3 + 7 + 7 + 3);
        assert_eq!(select(Some(Family::DCurve), &[4, 9]).unwrap().len(), 2);
    }

    #[test]
    fn outcome_json_shape() {
        let o = run(Family::E6Curve, None);
        let v = serde_json::to_value(&o).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["checks", "f", "family", "id", "param", "pass"]);
        assert_eq!(v["param"], serde_json::Value::Null);
        let c = &v["checks"][0];
        assert_eq!(c["name"], "quasi_homogeneous");
        assert!(c.get("note").is_none());
    }
}
