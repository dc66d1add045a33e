//! The approximation number by its two routes: iterated quasiopenness of
//! fibred powers, and the rank-partition formula.

use std::collections::BTreeSet;

use super::quasiopen::quasiopen;
use super::stratum::{AppResult, AppValue, Caveat, Certificate, PowerVerdict, Route, Stratum};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::geometry::{dimension, fibred_power, MapSpec};

/// Termination bound for the direct iteration: d for a C^d or single
/// declared irreducible target, the sum of component dimensions otherwise.
pub fn direct_bound(m: &MapSpec, cfg: &Config) -> Result<u64> {
    let budget = &cfg.budget;
    if m.target_components.is_empty() {
        return Ok(m.d() as u64);
    }
    let mut total: i64 = 0;
    for comp in &m.target_components {
        let dim = dimension(comp, budget)?;
        if dim < 0 {
            return Err(Error::Precondition(
                "declared target component is empty".into(),
            ));
        }
        total += dim;
    }
    Ok(total as u64)
}

/// Iterate i = 1, 2, ... testing quasiopenness of the i-th fibred power;
/// the first failure at i certifies app = i - 1, and survival to the bound
/// certifies app = infinity.
pub fn app_direct(m: &MapSpec, cfg: &Config) -> Result<AppResult> {
    let bound = direct_bound(m, cfg)?;
    let mut verdicts: Vec<PowerVerdict> = Vec::new();
    let mut caveats = BTreeSet::new();
    let mut first_suspicion: Option<u64> = None;

    let mut value = AppValue::Infinite;
    for i in 1..=bound {
        let power = fibred_power(m, i as usize)?;
        let qo = quasiopen(&power, cfg)?;
        if qo.heuristic_split {
            caveats.insert(Caveat::HeuristicSplitting);
        }
        if qo.oracle_suspicion && first_suspicion.is_none() {
            first_suspicion = Some(i - 1);
        }
        let witness = qo
            .pieces
            .iter()
            .find(|p| p.dense_in.is_none())
            .map(|p| (p.piece.clone(), p.image.clone()));
        verdicts.push(PowerVerdict {
            power: i as usize,
            quasiopen: qo.quasiopen,
            witness,
        });
        if !qo.quasiopen {
            value = AppValue::Finite(i - 1);
            break;
        }
    }

    let interval = first_suspicion.map(|lo| (AppValue::Finite(lo), value));
    Ok(AppResult {
        value,
        route: Route::Direct,
        certificate: Certificate::Direct(verdicts),
        caveats,
        interval,
        bound: Some(bound),
    })
}

/// The rank-partition formula: the infimum of
/// floor((d - r_p - 1) / ((k_p - r_p) - (h_p - d))) over strata with
/// k_p - r_p > h_p - d, infinity when no stratum qualifies. Valid on smooth
/// targets; emitted with a caveat otherwise.
pub fn app_formula(strata: &[Stratum], d: i64, target_smooth: bool) -> Result<AppResult> {
    let mut caveats = BTreeSet::new();
    if !target_smooth {
        caveats.insert(Caveat::TargetSingularFormulaInvalid);
    }
    if strata.iter().any(|s| s.randomized) {
        caveats.insert(Caveat::RandomizedStratification);
    }
    let mut best: Option<(u64, usize)> = None;
    for (idx, s) in strata.iter().enumerate() {
        s.validate(d)?;
        let denom = (s.k - s.r) - (s.h - d);
        if denom <= 0 {
            continue;
        }
        let numer = d - s.r - 1;
        debug_assert!(numer >= 0, "qualifying stratum with r >= d");
        let q = (numer / denom) as u64;
        match best {
            Some((b, _)) if b <= q => {}
            _ => best = Some((q, idx)),
        }
    }
    Ok(AppResult {
        value: best.map(|(v, _)| AppValue::Finite(v)).unwrap_or(AppValue::Infinite),
        route: Route::Formula,
        certificate: Certificate::Formula(best.map(|(_, i)| i)),
        caveats,
        interval: None,
        bound: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::polycore::{parse_poly, Ring};

    fn breakpoint(d: usize) -> MapSpec {
        let mut names: Vec<String> = (1..=d).map(|i| format!("y{}", i)).collect();
        names.extend((1..=d).map(|i| format!("x{}", i)));
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ring = Ring::rational(&refs);
        let gen_text = (1..=d)
            .map(|i| format!("y{}*x{}", i, i))
            .collect::<Vec<_>>()
            .join(" + ");
        let gen = parse_poly(&gen_text, &ring).unwrap();
        MapSpec::new(
            ring.clone(),
            d,
            Ideal::new(&ring, vec![gen]),
            vec![],
            false,
            vec![],
            None,
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn breakpoint_app_is_d_minus_one() {
        let cfg = Config::default();
        let r2 = app_direct(&breakpoint(2), &cfg).unwrap();
        assert_eq!(r2.value, AppValue::Finite(1));
        let r3 = app_direct(&breakpoint(3), &cfg).unwrap();
        assert_eq!(r3.value, AppValue::Finite(2));
    }

    #[test]
    fn coordinate_projection_is_infinite() {
        let ring = Ring::rational(&["y1", "y2", "x1"]);
        let m = MapSpec::new(
            ring.clone(),
            2,
            Ideal::zero(&ring),
            vec![],
            false,
            vec![],
            None,
            vec![],
        )
        .unwrap();
        let cfg = Config::default();
        let r = app_direct(&m, &cfg).unwrap();
        assert_eq!(r.value, AppValue::Infinite);
        assert_eq!(r.bound, Some(2));
    }

    fn stratum(k: i64, r: i64, h: i64) -> Stratum {
        let ring = Ring::rational(&["y1"]);
        Stratum {
            closure_ideal: Ideal::zero(&ring),
            excluded_ideal: None,
            image_ideal: Ideal::zero(&ring),
            k,
            r,
            w: k - r,
            h,
            component: "test".into(),
            randomized: false,
        }
    }

    #[test]
    fn formula_on_breakpoint_strata() {
        // Strata {k=3, r=2, w=1, h=3} and {k=2, r=0, w=2, h=3}, d = 2.
        let strata = vec![stratum(3, 2, 3), stratum(2, 0, 3)];
        let r = app_formula(&strata, 2, true).unwrap();
        assert_eq!(r.value, AppValue::Finite(1));
    }

    #[test]
    fn formula_universal_polynomial_jump_stratum() {
        // d=3: jump stratum k=1, r=0, w=1, h=3 gives floor(2/1) = 2.
        let strata = vec![stratum(3, 3, 3), stratum(1, 0, 3)];
        let r = app_formula(&strata, 3, true).unwrap();
        assert_eq!(r.value, AppValue::Finite(2));
    }

    #[test]
    fn formula_matrix_strata_with_caveat() {
        // Singular target: k=1, r=0, w=1, h=3, d=3 -> 2 with caveat.
        let strata = vec![stratum(3, 3, 3), stratum(1, 0, 3)];
        let r = app_formula(&strata, 3, false).unwrap();
        assert_eq!(r.value, AppValue::Finite(2));
        assert!(r.caveats.contains(&Caveat::TargetSingularFormulaInvalid));
    }

    #[test]
    fn formula_no_qualifying_stratum_is_infinite() {
        // Constant-rank projection: single stratum k=3, r=2, h=3, d=2:
        // k - r = 1 is not greater than h - d = 1.
        let strata = vec![stratum(3, 2, 3)];
        let r = app_formula(&strata, 2, true).unwrap();
        assert_eq!(r.value, AppValue::Infinite);
    }

    #[test]
    fn formula_rejects_inconsistent_strata() {
        let mut s = stratum(2, 1, 3);
        s.w = 5; // violates k = r + w
        assert!(app_formula(&[s], 2, true).is_err());
    }

    #[test]
    fn non_quasiopen_map_formula_yields_zero() {
        // Embedding-like stratum: h = k, r < d gives floor((d-r-1)/(d-r)) = 0.
        let strata = vec![stratum(1, 0, 1)];
        let r = app_formula(&strata, 2, true).unwrap();
        assert_eq!(r.value, AppValue::Finite(0));
    }
}
