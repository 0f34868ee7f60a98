//! The encoded ADE curves and Klein surfaces.

use std::fmt;
use std::ops::RangeInclusive;

use crate::poly::{parse_polynomial, Monomial, Polynomial, Ring};

use super::CatalogError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    ACurve,
    DCurve,
    E6Curve,
    E7Curve,
    E8Curve,
    ASurface,
    DSurface,
    E6Surface,
    E7Surface,
    E8Surface,
}

/// Largest accepted parameter.
pub const MAX_PARAM: u32 = 40;

impl Family {
    pub const ALL: [Family; 10] = [
        Family::ACurve,
        Family::DCurve,
        Family::E6Curve,
        Family::E7Curve,
        Family::E8Curve,
        Family::ASurface,
        Family::DSurface,
        Family::E6Surface,
        Family::E7Surface,
        Family::E8Surface,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::ACurve => "A-curve",
            Family::DCurve => "D-curve",
            Family::E6Curve => "E6-curve",
            Family::E7Curve => "E7-curve",
            Family::E8Curve => "E8-curve",
            Family::ASurface => "A-surface",
            Family::DSurface => "D-surface",
            Family::E6Surface => "E6-surface",
            Family::E7Surface => "E7-surface",
            Family::E8Surface => "E8-surface",
        }
    }

    pub fn from_id(id: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.id().eq_ignore_ascii_case(id))
    }

    pub fn is_surface(self) -> bool {
        matches!(self, Family::ASurface | Family::DSurface | Family::E6Surface | Family::E7Surface | Family::E8Surface)
    }

    /// Smallest admissible parameter, or `None` for the exceptional families.
    pub fn min_param(self) -> Option<u32> {
        match self {
            Family::ACurve | Family::ASurface | Family::DSurface => Some(1),
            Family::DCurve => Some(4),
            _ => None,
        }
    }

    /// Parameters swept by default.
    pub fn default_params(self) -> Vec<Option<u32>> {
        let range: Option<RangeInclusive<u32>> = match self {
            Family::ACurve => Some(1..=8),
            Family::DCurve => Some(4..=8),
            Family::ASurface | Family::DSurface => Some(2..=8),
            _ => None,
        };
        match range {
            Some(r) => r.map(Some).collect(),
            None => vec![None],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A printed Gröbner basis: the generators and the listed elements.
#[derive(Clone, Debug)]
pub struct GroebnerListing {
    pub name: String,
    pub generators: Vec<Polynomial>,
    pub listed: Vec<Polynomial>,
}

/// `(J : g)` is expected to be generated by `expected`.
#[derive(Clone, Debug)]
pub struct AnnihilatorCase {
    pub name: String,
    pub j: Vec<Polynomial>,
    pub g: Polynomial,
    pub expected: Vec<Polynomial>,
}

/// A printed monomial basis of a Jacobian quotient.
#[derive(Clone, Debug)]
pub struct BasisListing {
    pub monomials: Vec<Monomial>,
    /// Only the dimension is compared; the reason is reported.
    pub dimension_only: Option<String>,
}

/// One family member with its encoded expectations.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub family: Family,
    pub param: Option<u32>,
    /// The form used for cohomology: the curve itself, or the separated or
    /// section form of a surface.
    pub f: Polynomial,
    pub expected_milnor: u64,
    pub milnor_listing: Option<BasisListing>,
    pub table_form: Option<Polynomial>,
    pub invariants: Option<[Polynomial; 3]>,
    pub table_milnor: Option<u64>,
    pub table_listing: Option<BasisListing>,
    pub groebner_listings: Vec<GroebnerListing>,
    pub annihilators: Vec<AnnihilatorCase>,
    /// Extra remark attached to the `H^2` check.
    pub h2_note: Option<String>,
}

impl CatalogEntry {
    pub fn id(&self) -> String {
        match self.param {
            Some(k) => format!("{}[{k}]", self.family),
            None => self.family.id().to_string(),
        }
    }
}

fn poly(s: &str, r: &Ring) -> Polynomial {
    parse_polynomial(s, r).unwrap_or_else(|e| panic!("catalog polynomial `{s}`: {e}"))
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e)
}

/// `z1^k + z2^l`.
pub fn separated_curve(k: u32, l: u32) -> Polynomial {
    poly(&format!("z1^{k} + z2^{l}"), &Ring::standard(2))
}

/// `z1^i + z2^j + z3^k`.
pub fn separated_surface(i: u32, j: u32, k: u32) -> Polynomial {
    poly(&format!("z1^{i} + z2^{j} + z3^{k}"), &Ring::standard(3))
}

/// `Ann_{⟨f,∂₁f⟩}(∂₂f) = ⟨f, ∂₁f, z1^i z2^j : i ≤ k−2, 1 ≤ j ≤ l−1⟩`.
pub fn separated_curve_annihilator(k: u32, l: u32) -> AnnihilatorCase {
    let f = separated_curve(k, l);
    let d = f.gradient();
    let r = f.ring().clone();
    let mut expected = vec![f.clone(), d[0].clone()];
    for i in 0..=k - 2 {
        for j in 1..l {
            expected.push(Polynomial::monomial(&r, mono(&[i, j]), crate::poly::rat(1)));
        }
    }
    AnnihilatorCase { name: "Ann<f,d1f>(d2f)".into(), j: vec![f.clone(), d[0].clone()], g: d[1].clone(), expected }
}

/// `Ann_{⟨f,∂₁f,∂₂f⟩}(∂₃f) = ⟨f, ∂₁f, ∂₂f, z1^p z2^q z3^r : p ≤ i−2, q ≤ j−2, 1 ≤ r ≤ k−1⟩`.
pub fn separated_surface_annihilator(i: u32, j: u32, k: u32) -> AnnihilatorCase {
    let f = separated_surface(i, j, k);
    let d = f.gradient();
    let r = f.ring().clone();
    let mut expected = vec![f.clone(), d[0].clone(), d[1].clone()];
    for p in 0..=i - 2 {
        for q in 0..=j - 2 {
            for s in 1..k {
                expected.push(Polynomial::monomial(&r, mono(&[p, q, s]), crate::poly::rat(1)));
            }
        }
    }
    AnnihilatorCase {
        name: "Ann<f,d1f,d2f>(d3f)".into(),
        j: vec![f.clone(), d[0].clone(), d[1].clone()],
        g: d[2].clone(),
        expected,
    }
}

/// `Ann_J(g) = J`.
fn non_zero_divisor(name: &str, j: Vec<Polynomial>, g: &Polynomial) -> AnnihilatorCase {
    AnnihilatorCase { name: name.into(), expected: j.clone(), j, g: g.clone() }
}

fn separated_surface_extras(f: &Polynomial) -> Vec<AnnihilatorCase> {
    let d = f.gradient();
    vec![
        non_zero_divisor("Ann<f,d1f>(d2f)", vec![f.clone(), d[0].clone()], &d[1]),
        non_zero_divisor("Ann<f,d2f>(d3f)", vec![f.clone(), d[1].clone()], &d[2]),
    ]
}

/// Monomials `z^e` with `e < bounds` componentwise.
fn box_monomials(bounds: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out.into_iter().flat_map(|e: Vec<u32>| (0..b).map(move |x| [e.clone(), vec![x]].concat())).collect();
    }
    out.iter().map(|e| mono(e)).collect()
}

/// The catalog entry for `family` at `param`.
pub fn entry(family: Family, param: Option<u32>) -> Result<CatalogEntry, CatalogError> {
    let k = match (family.min_param(), param) {
        (Some(min), Some(k)) if (min..=MAX_PARAM).contains(&k) => k,
        (Some(min), Some(k)) => return Err(CatalogError::ParamOutOfRange { family, param: k, min, max: MAX_PARAM }),
        (Some(_), None) => return Err(CatalogError::MissingParam(family)),
        (None, Some(_)) => return Err(CatalogError::UnexpectedParam(family)),
        (None, None) => 0,
    };
    let r2 = Ring::standard(2);
    let r3 = Ring::standard(3);
    let xy = Ring::parse("x,y").expect("x,y");
    let base = |f: Polynomial, mu: u64| CatalogEntry {
        family,
        param,
        f,
        expected_milnor: mu,
        milnor_listing: None,
        table_form: None,
        invariants: None,
        table_milnor: None,
        table_listing: None,
        groebner_listings: Vec::new(),
        annihilators: Vec::new(),
        h2_note: None,
    };
    let listing = |monomials: Vec<Monomial>| Some(BasisListing { monomials, dimension_only: None });
    let e = match family {
        Family::ACurve => {
            let mut e = base(separated_curve(k + 1, 2), k as u64);
            e.milnor_listing = listing(box_monomials(&[k, 1]));
            e.annihilators.push(separated_curve_annihilator(k + 1, 2));
            e
        }
        Family::E6Curve | Family::E8Curve => {
            let l = if family == Family::E6Curve { 4 } else { 5 };
            let mut e = base(separated_curve(3, l), 2 * (l as u64 - 1));
            e.milnor_listing = listing(box_monomials(&[2, l - 1]));
            e.annihilators.push(separated_curve_annihilator(3, l));
            e
        }
        Family::DCurve => {
            let f = poly(&format!("z1^2*z2 + z2^{}", k - 1), &r2);
            let d = f.gradient();
            let b1 = poly(&format!("z1^2 + {}*z2^{}", k - 1, k - 2), &r2);
            let top = poly(&format!("z2^{}", k - 1), &r2);
            let mut e = base(f.clone(), k as u64);
            let mut ms = vec![mono(&[1, 0])];
            ms.extend((0..=k - 2).map(|j| mono(&[0, j])));
            e.milnor_listing = listing(ms);
            e.groebner_listings = vec![
                GroebnerListing {
                    name: "<f,d2f>".into(),
                    generators: vec![f.clone(), d[1].clone()],
                    listed: vec![b1.clone(), top.clone()],
                },
                GroebnerListing {
                    name: "<d1f,d2f>".into(),
                    generators: d.clone(),
                    listed: vec![b1, poly("z1*z2", &r2), top],
                },
            ];
            let mut expected = vec![f.clone(), d[1].clone(), poly(&format!("z2^{}", k - 2), &r2)];
            expected.extend((0..=k - 2).map(|j| poly(&format!("z1*z2^{j}"), &r2)));
            e.annihilators.push(AnnihilatorCase {
                name: "Ann<f,d2f>(d1f)".into(),
                j: vec![f.clone(), d[1].clone()],
                g: d[0].clone(),
                expected,
            });
            e
        }
        Family::E7Curve => {
            let f = poly("z1^3 + z1*z2^3", &r2);
            let d = f.gradient();
            let mut e = base(f.clone(), 7);
            e.groebner_listings = vec![
                GroebnerListing {
                    name: "<f,d1f>".into(),
                    generators: vec![f.clone(), d[0].clone()],
                    listed: vec![poly("3*z1^2+z2^3", &r2), poly("z1*z2^3", &r2), poly("z2^6", &r2)],
                },
                GroebnerListing {
                    name: "<d1f,d2f>".into(),
                    generators: d.clone(),
                    listed: vec![poly("3*z1^2+z2^3", &r2), poly("z1*z2^2", &r2), poly("z2^5", &r2)],
                },
            ];
            e
        }
        Family::ASurface => {
            let n = k;
            let f = separated_surface(2, 2, n);
            let mut e = base(f.clone(), n as u64 - 1);
            e.milnor_listing = listing(box_monomials(&[1, 1, n - 1]));
            e.table_form = Some(poly(&format!("-{n}*(z1*z2 - z3^{n})"), &r3));
            e.invariants = Some([poly(&format!("x^{n}"), &xy), poly(&format!("y^{n}"), &xy), poly("x*y", &xy)]);
            e.table_milnor = Some(n as u64 - 1);
            e.table_listing = Some(BasisListing {
                monomials: (0..n.saturating_sub(1)).map(|r| mono(&[0, 0, r])).collect(),
                dimension_only: Some(
                    "the table lists z1 among 1, ..., z3^(n-2); z1 lies in the Jacobian ideal, so only the dimension is compared"
                        .into(),
                ),
            });
            if n >= 2 {
                e.annihilators.push(separated_surface_annihilator(2, 2, n));
                e.annihilators.extend(separated_surface_extras(&f));
            }
            e
        }
        Family::E6Surface | Family::E8Surface => {
            let (kk, mu) = if family == Family::E6Surface { (4, 6) } else { (5, 8) };
            let f = separated_surface(2, 3, kk);
            let mut e = base(f.clone(), mu);
            e.milnor_listing = listing(box_monomials(&[1, 2, kk - 1]));
            e.annihilators.push(separated_surface_annihilator(2, 3, kk));
            e.annihilators.extend(separated_surface_extras(&f));
            if family == Family::E6Surface {
                e.table_form = Some(poly("4*(z3^2 - z2^3 + 108*z1^4)", &r3));
                e.invariants = Some([
                    poly("x^5*y - x*y^5", &xy),
                    poly("x^8 + 14*x^4*y^4 + y^8", &xy),
                    poly("-x^12 + 33*x^8*y^4 + 33*x^4*y^8 - y^12", &xy),
                ]);
                e.table_milnor = Some(6);
                e.table_listing = listing(vec![
                    mono(&[0, 0, 0]),
                    mono(&[0, 1, 0]),
                    mono(&[1, 0, 0]),
                    mono(&[1, 1, 0]),
                    mono(&[2, 0, 0]),
                    mono(&[2, 1, 0]),
                ]);
            } else {
                e.table_form = Some(poly("10*(1728*z1^5 + z2^3 - z3^2)", &r3));
                e.invariants = Some([
                    poly("x^11*y + 11*x^6*y^6 - x*y^11", &xy),
                    poly("x^20 - 228*x^15*y^5 + 494*x^10*y^10 + 228*x^5*y^15 + y^20", &xy),
                    poly("x^30 + 522*x^25*y^5 - 10005*x^20*y^10 - 10005*x^10*y^20 - 522*x^5*y^25 + y^30", &xy),
                ]);
                e.table_milnor = Some(8);
                e.table_listing = listing(box_monomials(&[4, 2, 1]));
            }
            e
        }
        Family::DSurface => {
            let n = k;
            let kk = n + 2;
            let f = poly(&format!("z1^2 + z2^2*z3 + z3^{}", kk - 1), &r3);
            let d = f.gradient();
            let mut e = base(f.clone(), kk as u64);
            let mut ms = vec![mono(&[0, 1, 0])];
            ms.extend((0..=kk - 2).map(|r| mono(&[0, 0, r])));
            e.milnor_listing = listing(ms);
            let lam = 2 * n as i64 * if n % 2 == 1 { 1 } else { -1 };
            e.table_form = Some(poly(
                &format!(
                    "({lam})*(4*z1^{} + ({})*z1*z2^2 + ({})*z3^2)",
                    n + 1,
                    if n % 2 == 0 { -1 } else { 1 },
                    if n % 2 == 0 { 1 } else { -1 }
                ),
                &r3,
            ));
            let sg = |even: i32| if (n % 2 == 0) == (even > 0) { "+" } else { "-" };
            e.invariants = Some([
                poly("x^2*y^2", &xy),
                poly(&format!("x^{} {} y^{}", 2 * n, sg(1), 2 * n), &xy),
                poly(&format!("x^{}*y {} x*y^{}", 2 * n + 1, sg(-1), 2 * n + 1), &xy),
            ]);
            e.table_milnor = Some(n as u64 + 1);
            let mut tl = vec![mono(&[0, 0, 0]), mono(&[0, 1, 0])];
            tl.extend((1..n).map(|i| mono(&[i, 0, 0])));
            e.table_listing = listing(tl);
            let b3 = poly(&format!("z2^2 + {}*z3^{}", kk - 1, kk - 2), &r3);
            let top = poly(&format!("z3^{}", kk - 1), &r3);
            e.groebner_listings = vec![
                GroebnerListing {
                    name: "<d1f,d2f,d3f>".into(),
                    generators: d.clone(),
                    listed: vec![top.clone(), poly("z2*z3", &r3), b3.clone(), poly("z1", &r3)],
                },
                GroebnerListing {
                    name: "<f,d1f,d3f>".into(),
                    generators: vec![f.clone(), d[0].clone(), d[2].clone()],
                    listed: vec![poly("z1", &r3), top, b3],
                },
            ];
            let mut expected = vec![f.clone(), d[0].clone(), d[2].clone(), poly(&format!("z3^{}", kk - 2), &r3)];
            expected.extend((0..=kk - 2).map(|j| poly(&format!("z2*z3^{j}"), &r3)));
            e.annihilators.push(AnnihilatorCase {
                name: "Ann<f,d1f,d3f>(d2f)".into(),
                j: vec![f.clone(), d[0].clone(), d[2].clone()],
                g: d[1].clone(),
                expected,
            });
            e.annihilators.push(non_zero_divisor("Ann<f,d1f>(d3f)", vec![f.clone(), d[0].clone()], &d[2]));
            e.annihilators.push(non_zero_divisor("Ann<f,d2f>(d3f)", vec![f.clone(), d[1].clone()], &d[2]));
            e
        }
        Family::E7Surface => {
            let f = poly("z1^2 + z2^3 + z2*z3^3", &r3);
            let d = f.gradient();
            let mut e = base(f.clone(), 7);
            let mut ms = vec![mono(&[0, 1, 0]), mono(&[0, 2, 0])];
            ms.extend((0..=4).map(|r| mono(&[0, 0, r])));
            e.milnor_listing = Some(BasisListing {
                monomials: ms,
                dimension_only: Some(
                    "the listed z2^2 equals -z3^3/3 in the Milnor algebra; the standard monomials have z2*z3 instead"
                        .into(),
                ),
            });
            e.table_form = Some(poly("8*(3*z3^2 - 12*z2^3 + z2*z1^3)", &r3));
            e.invariants = Some([
                poly("x^8 + 14*x^4*y^4 + y^8", &xy),
                poly("-3*x^2*y^10 + 6*x^6*y^6 - 3*x^10*y^2", &xy),
                poly("-34*x^5*y^13 - x^17*y + 34*x^13*y^5 + x*y^17", &xy),
            ]);
            e.table_milnor = Some(7);
            e.table_listing = listing(vec![
                mono(&[0, 0, 0]),
                mono(&[0, 1, 0]),
                mono(&[0, 2, 0]),
                mono(&[1, 0, 0]),
                mono(&[1, 1, 0]),
                mono(&[1, 2, 0]),
                mono(&[2, 0, 0]),
            ]);
            let b = poly("3*z2^2 + z3^3", &r3);
            e.groebner_listings = vec![
                GroebnerListing {
                    name: "<d1f,d2f,d3f>".into(),
                    generators: d.clone(),
                    listed: vec![poly("z3^5", &r3), poly("z2*z3^2", &r3), b.clone(), poly("z1", &r3)],
                },
                GroebnerListing {
                    name: "<f,d1f,d2f>".into(),
                    generators: vec![f.clone(), d[0].clone(), d[1].clone()],
                    listed: vec![poly("z3^6", &r3), poly("z2*z3^3", &r3), b, poly("z1", &r3)],
                },
            ];
            e.h2_note =
                Some("the printed H^2 line reads C^k; the surrounding statements give C^7, which is encoded".into());
            e
        }
    };
    Ok(e)
}
