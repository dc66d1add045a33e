//! Openness of a polynomial map, for targets that are C^d or asserted
//! locally irreducible: the Remmert rank must equal d everywhere, which is
//! tested through fibre-dimension jump loci per source component and
//! cross-checked through quasiopenness of the d-th fibred power. The two
//! sub-checks are equivalent, so disagreement is a hard internal error.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::geometry::{
    chart_expand, dimension, fibre_jump_locus, fibred_power, split_components, MapSpec,
};
use crate::groebner::Ideal;
use crate::polycore::Poly;

use super::quasiopen::quasiopen;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpennessVerdict {
    Open,
    NotOpen,
    Undecided(String),
}

impl OpennessVerdict {
    pub fn as_str(&self) -> &str {
        match self {
            OpennessVerdict::Open => "open",
            OpennessVerdict::NotOpen => "not-open",
            OpennessVerdict::Undecided(_) => "undecided",
        }
    }
}

pub fn openness(m: &MapSpec, cfg: &Config) -> Result<OpennessVerdict> {
    openness_with_power_hint(m, cfg, None)
}

/// As [`openness`], but accepting an already-computed verdict for the
/// quasiopenness of the d-th fibred power (the direct route tests exactly
/// these powers). The rank-route cross-check still runs.
pub(crate) fn openness_with_power_hint(
    m: &MapSpec,
    cfg: &Config,
    power_hint: Option<bool>,
) -> Result<OpennessVerdict> {
    let budget = &cfg.budget;
    if m.target_components.len() > 1 {
        return Ok(OpennessVerdict::Undecided(
            "reducible declared target: the normalization route is out of scope".into(),
        ));
    }
    if m.target_components.len() == 1 && !m.target_locally_irreducible {
        return Ok(OpennessVerdict::Undecided(
            "declared target not asserted locally irreducible".into(),
        ));
    }
    let d_dim = if m.target_components.is_empty() {
        m.d() as i64
    } else {
        dimension(&m.target_components[0], budget)?
    };
    if d_dim < 1 {
        return Err(Error::Precondition("target of dimension < 1".into()));
    }

    // Route (a): the Remmert rank is d everywhere iff on every source
    // component of dimension n the locus of fibres of dimension > n - d is
    // empty.
    let mut open_by_rank = true;
    'charts: for chart in chart_expand(m)? {
        let cm = &chart.map;
        if cm.source_ideal.is_unit(budget)? {
            continue;
        }
        let target_vars: Vec<Poly> = cm
            .target_var_indices()
            .iter()
            .map(|&v| Poly::var(cm.ring(), v))
            .collect();
        let comps: Vec<Ideal> = if cm.components_asserted {
            cm.source_components.clone().unwrap()
        } else {
            split_components(&cm.source_ideal, &cm.split_hints, &target_vars, budget)?
                .pieces
                .into_iter()
                .map(|p| p.ideal)
                .collect()
        };
        for comp in comps {
            if comp.is_unit(budget)? {
                continue;
            }
            let n_c = dimension(&comp, budget)?;
            let level = n_c - d_dim + 1;
            if level <= 0 {
                // A component of dimension below d cannot have rank d.
                open_by_rank = false;
                break 'charts;
            }
            let restricted = cm.with_source(comp.clone());
            let seed = cfg.derive_seed(&format!(
                "openness:{}:{}",
                chart.label,
                comp.canonical_print(budget)?
            ));
            let jump = fibre_jump_locus(&restricted, level as usize, seed, cfg)?;
            if !jump.is_unit(budget)? {
                open_by_rank = false;
                break 'charts;
            }
        }
    }

    // Route (b): quasiopenness of the d-th fibred power.
    let open_by_power = match power_hint {
        Some(b) => b,
        None => {
            let power = fibred_power(m, d_dim as usize)?;
            quasiopen(&power, cfg)?.quasiopen
        }
    };

    if open_by_rank != open_by_power {
        return Err(Error::InternalContradiction(format!(
            "openness sub-checks disagree: rank route says {}, power route says {}",
            open_by_rank, open_by_power
        )));
    }
    Ok(if open_by_rank {
        OpennessVerdict::Open
    } else {
        OpennessVerdict::NotOpen
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, Ring};

    fn map(ring: &Ring, d: usize, gens: &[&str]) -> MapSpec {
        MapSpec::new(
            ring.clone(),
            d,
            Ideal::new(
                ring,
                gens.iter().map(|s| parse_poly(s, ring).unwrap()).collect(),
            ),
            vec![],
            false,
            vec![],
            None,
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn coordinate_projection_is_open() {
        let ring = Ring::rational(&["y1", "y2", "x1", "x2"]);
        let m = map(&ring, 2, &[]);
        let cfg = Config::default();
        assert_eq!(openness(&m, &cfg).unwrap(), OpennessVerdict::Open);
    }

    #[test]
    fn breakpoint_not_open() {
        let ring = Ring::rational(&["y1", "y2", "x1", "x2"]);
        let m = map(&ring, 2, &["y1*x1 + y2*x2"]);
        let cfg = Config::default();
        assert_eq!(openness(&m, &cfg).unwrap(), OpennessVerdict::NotOpen);
    }

    #[test]
    fn reducible_target_undecided() {
        let ring = Ring::rational(&["y1", "y2", "x1"]);
        let y_ring = ring.restrict(&[0, 1]);
        let m = MapSpec::new(
            ring.clone(),
            2,
            Ideal::new(&ring, vec![parse_poly("y1*y2", &ring).unwrap()]),
            vec![
                Ideal::new(&y_ring, vec![parse_poly("y1", &y_ring).unwrap()]),
                Ideal::new(&y_ring, vec![parse_poly("y2", &y_ring).unwrap()]),
            ],
            false,
            vec![],
            None,
            vec![],
        )
        .unwrap();
        let cfg = Config::default();
        assert!(matches!(
            openness(&m, &cfg).unwrap(),
            OpennessVerdict::Undecided(_)
        ));
    }
}
