//! Full analysis pipeline: both app routes, openness, critical values,
//! fibre counts and the oracle cross-checks, assembled deterministically.

use std::collections::BTreeSet;

use super::app::{app_direct, app_formula};
use super::counting::{fibre_count_bound, generic_fibre_count};
use super::critical::critical_values;
use super::openness::{openness_with_power_hint, OpennessVerdict};
use super::rank::rank_partition;
use super::stratum::{AppResult, AppValue, Caveat, Certificate, Stratum};
use crate::config::Config;
use crate::error::Result;
use crate::geometry::{chart_expand, dimension, ff_dim_estimate, ORACLE_PRIMES};
use crate::geometry::MapSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteChoice {
    Direct,
    Formula,
    Both,
}

#[derive(Debug, Clone)]
pub struct FibreReport {
    pub generic_count: usize,
    pub bound: Option<u64>,
    pub bound_note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct OracleCheck {
    pub label: String,
    pub dim: i64,
    pub estimate: i64,
    pub counts: Vec<(u64, u64)>,
    pub agree: bool,
}

#[derive(Debug, Clone)]
pub struct Analysis {
    /// Size of the target variable block.
    pub d: usize,
    /// Dimension of the target variety (of the declared components, or d).
    pub target_dim: i64,
    pub app_direct: Option<AppResult>,
    pub app_formula: Option<AppResult>,
    pub strata: Vec<Stratum>,
    pub openness: OpennessVerdict,
    /// Canonical print and dimension of the critical-value ideal.
    pub critical_values: Option<(String, i64)>,
    pub fibre_count: Option<FibreReport>,
    pub oracle_checks: Vec<OracleCheck>,
    pub caveats: BTreeSet<Caveat>,
    /// Set when the two routes disagree on a smooth target, or a proved
    /// bound fails; never silently dropped.
    pub discrepancy: Option<String>,
}

pub fn analyze(m: &MapSpec, cfg: &Config, route: RouteChoice) -> Result<Analysis> {
    let budget = &cfg.budget;
    let target_dim = if m.target_components.is_empty() {
        m.d() as i64
    } else {
        let mut total = 0;
        for c in &m.target_components {
            total += dimension(c, budget)?;
        }
        total
    };

    let mut caveats: BTreeSet<Caveat> = BTreeSet::new();
    let mut discrepancy: Option<String> = None;

    let direct = if route != RouteChoice::Formula {
        let r = app_direct(m, cfg)?;
        caveats.extend(r.caveats.iter().cloned());
        Some(r)
    } else {
        None
    };

    // The formula route runs for C^d targets (smooth) and for a single
    // declared component (with the singular-target caveat); it is skipped
    // for reducible declared targets where no single d applies.
    let formula_eligible = m.target_components.len() <= 1;
    let mut strata: Vec<Stratum> = Vec::new();
    let formula = if route != RouteChoice::Direct && formula_eligible {
        for chart in chart_expand(m)? {
            if chart.map.source_ideal.is_unit(budget)? {
                continue;
            }
            strata.extend(rank_partition(&chart.map, &chart.label, cfg)?);
        }
        let target_smooth = m.target_components.is_empty();
        let d_used = if target_smooth {
            m.d() as i64
        } else {
            target_dim
        };
        let r = app_formula(&strata, d_used, target_smooth)?;
        caveats.extend(r.caveats.iter().cloned());
        Some(r)
    } else {
        None
    };

    // Route agreement on smooth targets is a theorem; carry a discrepancy
    // error when it fails.
    if let (Some(dr), Some(fr)) = (&direct, &formula) {
        if m.target_components.is_empty() && dr.value != fr.value {
            discrepancy = Some(format!(
                "route disagreement on smooth target: direct = {}, formula = {}",
                dr.value, fr.value
            ));
        }
    }

    // The direct route already tested quasiopenness of the first `bound`
    // fibred powers; by monotonicity of failure the power-d verdict needed
    // by the openness test can be read off its certificates.
    let power_hint: Option<bool> = direct.as_ref().and_then(|r| {
        let d_dim = if m.target_components.is_empty() {
            m.d() as u64
        } else if m.target_components.len() == 1 {
            target_dim as u64
        } else {
            return None; // openness is undecided; the hint is unused
        };
        match &r.certificate {
            Certificate::Direct(vs) => {
                if vs
                    .iter()
                    .any(|v| !v.quasiopen && (v.power as u64) <= d_dim)
                {
                    Some(false)
                } else {
                    vs.iter()
                        .find(|v| v.power as u64 == d_dim)
                        .map(|v| v.quasiopen)
                }
            }
            _ => None,
        }
    });
    let open = openness_with_power_hint(m, cfg, power_hint)?;

    // Critical values: smooth-target pipeline over the computed strata.
    let critical = if m.target_components.is_empty() && !strata.is_empty() {
        let cv = critical_values(&strata, m.d() as i64, m.y_ring(), budget)?;
        let dim = dimension(&cv, budget)?;
        Some((cv.canonical_print(budget)?, dim))
    } else {
        None
    };

    // Fibre-count pipeline: applicable when the target is C^d and the
    // generic fibre is finite (every component's generic stratum has w = 0).
    let fibre = if m.target_components.is_empty()
        && !strata.is_empty()
        && strata.iter().filter(|s| s.k == s.h).all(|s| s.w == 0)
        && strata.iter().any(|s| s.k == s.h)
    {
        let count = generic_fibre_count(m, cfg.derive_seed("generic-count"), cfg)?;
        let (bound, note) = match fibre_count_bound(&strata, m.d() as i64) {
            Ok(b) => (b, None),
            Err(e) => (None, Some(e.to_string())),
        };
        if let Some(b) = bound {
            if (count as u64) < b {
                discrepancy = Some(format!(
                    "generic fibre count {} below proved lower bound {}",
                    count, b
                ));
            }
        }
        Some(FibreReport {
            generic_count: count,
            bound,
            bound_note: note,
        })
    } else {
        None
    };

    // Oracle cross-checks: exact dimension against finite-field counts for
    // small rings.
    let mut oracle_checks = Vec::new();
    let mut oracle_targets: Vec<(String, &crate::groebner::Ideal)> =
        vec![("source".to_string(), &m.source_ideal)];
    for (i, c) in m.target_components.iter().enumerate() {
        oracle_targets.push((format!("target-component-{}", i), c));
    }
    for (label, ideal) in oracle_targets {
        if ideal.ring().nvars() <= 6 {
            if let Ok((estimate, counts)) = ff_dim_estimate(ideal, &ORACLE_PRIMES) {
                let dim = dimension(ideal, budget)?;
                oracle_checks.push(OracleCheck {
                    label,
                    dim,
                    estimate,
                    agree: dim == estimate,
                    counts,
                });
            }
        }
    }

    Ok(Analysis {
        d: m.d(),
        target_dim,
        app_direct: direct,
        app_formula: formula,
        strata,
        openness: open,
        critical_values: critical,
        fibre_count: fibre,
        oracle_checks,
        caveats,
        discrepancy,
    })
}

/// Refine one stratum by a target-block hyperplane slice: the stratum is
/// replaced by its intersection with the hyperplane and its complement
/// (same closure data). Used to test partition-refinement invariance of the
/// formula.
pub fn refine_stratum(
    strata: &[Stratum],
    idx: usize,
    hyperplane: &crate::polycore::Poly,
    m: &MapSpec,
    cfg: &Config,
) -> Result<Vec<Stratum>> {
    let budget = &cfg.budget;
    let mut out: Vec<Stratum> = Vec::new();
    for (i, s) in strata.iter().enumerate() {
        out.push(s.clone());
        if i != idx {
            continue;
        }
        let sliced = s.closure_ideal.with_extra(std::slice::from_ref(hyperplane));
        if sliced.is_unit(budget)? {
            continue;
        }
        let k = dimension(&sliced, budget)?;
        if k < 0 {
            continue;
        }
        let image = m.image_closure_of(&sliced, budget)?;
        let r = dimension(&image, budget)?;
        out.push(Stratum {
            closure_ideal: sliced,
            excluded_ideal: s.excluded_ideal.clone(),
            image_ideal: image,
            k,
            r,
            w: k - r,
            h: s.h,
            component: format!("{}:refined", s.component),
            randomized: s.randomized,
        });
    }
    Ok(out)
}

impl Analysis {
    /// Summary value for exit-code purposes: caveats mean
    /// completed-with-caveats.
    pub fn has_caveats(&self) -> bool {
        !self.caveats.is_empty()
    }

    pub fn app_direct_value(&self) -> Option<AppValue> {
        self.app_direct.as_ref().map(|r| r.value)
    }

    pub fn app_formula_value(&self) -> Option<AppValue> {
        self.app_formula.as_ref().map(|r| r.value)
    }
}
