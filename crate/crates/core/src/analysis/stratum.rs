//! Strata, approximation-number values and result types.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Approximation number: a non-negative integer or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AppValue {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for AppValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppValue::Finite(v) => write!(f, "{}", v),
            AppValue::Infinite => write!(f, "infinity"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Caveat {
    TargetSingularFormulaInvalid,
    RandomizedStratification,
    HeuristicSplitting,
}

impl Caveat {
    pub fn as_str(&self) -> &'static str {
        match self {
            Caveat::TargetSingularFormulaInvalid => "target-singular-formula-invalid",
            Caveat::RandomizedStratification => "randomized-stratification",
            Caveat::HeuristicSplitting => "heuristic-splitting",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Direct,
    Formula,
}

/// Per-power verdict from the direct route.
#[derive(Debug, Clone)]
pub struct PowerVerdict {
    pub power: usize,
    pub quasiopen: bool,
    /// On failure: a witness piece with no dense image (canonical prints).
    pub witness: Option<(String, String)>,
}

#[derive(Debug, Clone)]
pub enum Certificate {
    /// Per-i quasiopenness verdicts of the direct route.
    Direct(Vec<PowerVerdict>),
    /// Index of a minimizing stratum for the formula route.
    Formula(Option<usize>),
}

#[derive(Debug, Clone)]
pub struct AppResult {
    pub value: AppValue,
    pub route: Route,
    pub certificate: Certificate,
    pub caveats: BTreeSet<Caveat>,
    /// Set when heuristic splitting was flagged by the oracle: the value is
    /// then only certified to lie in [interval.0, interval.1].
    pub interval: Option<(AppValue, AppValue)>,
    /// Termination bound used by the direct route (d, or D for declared
    /// reducible targets).
    pub bound: Option<u64>,
}

/// One rank-partition piece: an irreducible locally closed subset on which
/// the restricted map has constant Remmert rank.
#[derive(Debug, Clone)]
pub struct Stratum {
    /// Ideal of the stratum closure, in the (chart) source ring.
    pub closure_ideal: Ideal,
    /// Ideal of the excluded sub-locus (the jump locus pulled back), when
    /// the stratum is the complement of further jumps.
    pub excluded_ideal: Option<Ideal>,
    /// Ideal of the image closure, in the Y-ring.
    pub image_ideal: Ideal,
    /// Stratum dimension.
    pub k: i64,
    /// Remmert rank of the restricted map (dimension of the image closure).
    pub r: i64,
    /// Restricted fibre dimension (k - r).
    pub w: i64,
    /// Minimum local dimension of the source along the stratum (the
    /// dimension of the carrying source component).
    pub h: i64,
    /// Chart and component provenance tag.
    pub component: String,
    pub randomized: bool,
}

impl Stratum {
    pub fn validate(&self, d: i64) -> Result<()> {
        if self.k != self.r + self.w {
            return Err(Error::InvalidStratum(format!(
                "k = {} but r + w = {}",
                self.k,
                self.r + self.w
            )));
        }
        if self.r < 0 || self.r > d {
            return Err(Error::InvalidStratum(format!("r = {} out of [0, {}]", self.r, d)));
        }
        if self.w < 0 {
            return Err(Error::InvalidStratum(format!("w = {} negative", self.w)));
        }
        if self.k > self.h {
            return Err(Error::InvalidStratum(format!(
                "k = {} exceeds h = {}",
                self.k, self.h
            )));
        }
        Ok(())
    }
}
