use serde::{Serialize, Serializer};

use super::{KoszulComplex, KoszulError};
use crate::poly::WeightVector;

/// What a degree of cohomology is expected to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Finite(u64),
    Infinite,
}

impl Serialize for Expectation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Expectation::Finite(n) => s.serialize_u64(*n),
            Expectation::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl std::fmt::Display for Expectation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expectation::Finite(n) => write!(f, "{n}"),
            Expectation::Infinite => f.write_str("infinite"),
        }
    }
}

/// `H^p` on its weight window. `hilbert[i]` is `dim H^p` at weight
/// `weight_min + i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub p: usize,
    pub weight_min: i64,
    pub total: u64,
    pub finite: bool,
    pub hilbert: Vec<u64>,
    pub expected: Option<Expectation>,
    pub pass: Option<bool>,
}

impl DegreeReport {
    /// `dim H^p_w`, zero outside the window.
    pub fn at(&self, w: i64) -> u64 {
        usize::try_from(w - self.weight_min).ok().and_then(|i| self.hilbert.get(i)).copied().unwrap_or(0)
    }

    pub fn weight_max(&self) -> i64 {
        self.weight_min + self.hilbert.len() as i64 - 1
    }
}

/// Per-slice data: `dim H = dim − rank_out − rank_in`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceData {
    pub p: usize,
    pub w: i64,
    pub dim: usize,
    pub rank_out: usize,
    pub rank_in: usize,
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub case: String,
    pub f: String,
    pub weights: WeightVector,
    pub bound: u64,
    pub degrees: Vec<DegreeReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub slices: Vec<SliceData>,
}

impl CohomologyReport {
    /// No degree failed its expectation.
    pub fn pass(&self) -> bool {
        self.degrees.iter().all(|d| d.pass != Some(false))
    }

    pub fn degree(&self, p: usize) -> &DegreeReport {
        &self.degrees[p]
    }
}

impl KoszulComplex {
    /// Dimensions of `H^p_w` for `p ≤ p_max` over each degree's window.
    ///
    /// A degree is judged finite when it vanishes on the top `d` weights of
    /// its window. Expecting a finite degree that is nonzero there is
    /// reported as [`KoszulError::BoundTooSmall`].
    pub fn cohomology(&self, expectations: Option<&[Expectation]>) -> Result<CohomologyReport, KoszulError> {
        if let Some(e) = expectations {
            if e.len() != self.p_max + 1 {
                return Err(KoszulError::ExpectationArity { expected: self.p_max + 1, got: e.len() });
            }
        }
        let ranks = self.ranks()?;
        let band = self.weights.degree as usize;
        let mut degrees = Vec::new();
        let mut slices = Vec::new();
        for p in 0..=self.p_max {
            let (lo, hi) = self.weight_window(p);
            let mut hilbert = Vec::new();
            for w in lo..=hi {
                let dim = self.dim(p, w)?;
                let rank_out = ranks[&(p, w)];
                let rank_in = if p == 0 { 0 } else { ranks[&(p - 1, w)] };
                let h = dim.checked_sub(rank_out + rank_in).expect("ranks exceed dimension");
                slices.push(SliceData { p, w, dim, rank_out, rank_in, h });
                hilbert.push(h as u64);
            }
            let finite = hilbert.iter().rev().take(band).all(|&h| h == 0);
            let total = hilbert.iter().sum();
            let expected = expectations.map(|e| e[p]);
            if expected.is_some_and(|e| matches!(e, Expectation::Finite(_))) && !finite {
                return Err(KoszulError::BoundTooSmall { p, bound: self.bound });
            }
            let pass = expected.map(|e| match e {
                Expectation::Finite(n) => finite && total == n,
                Expectation::Infinite => !finite,
            });
            degrees.push(DegreeReport { p, weight_min: lo, total, finite, hilbert, expected, pass });
        }
        Ok(CohomologyReport {
            case: String::new(),
            f: self.f.to_string(),
            weights: self.weights.clone(),
            bound: self.bound,
            degrees,
            slices,
        })
    }
}
