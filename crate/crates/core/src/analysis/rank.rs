//! Rank partitions by recursive jump-locus refinement.
//!
//! Each source component Z contributes its generic stratum (full dimension,
//! generic fibre dimension w) and recurses into the locus where the fibre
//! dimension exceeds w, pulled back into Z and split into pieces. Strict
//! dimension descent terminates the recursion.

use crate::config::Config;
use crate::error::Result;
use crate::geometry::{dimension, fibre_jump_locus, split_components, MapSpec};
use crate::groebner::{lift, Ideal};
use crate::polycore::Poly;

use super::stratum::Stratum;

/// Rank partition of an affine map (one chart). Component tags are prefixed
/// with `tag` for provenance across charts.
pub fn rank_partition(m: &MapSpec, tag: &str, cfg: &Config) -> Result<Vec<Stratum>> {
    let budget = &cfg.budget;
    let target_vars: Vec<Poly> = m
        .target_var_indices()
        .iter()
        .map(|&v| Poly::var(m.ring(), v))
        .collect();

    let components: Vec<Ideal> = if m.components_asserted {
        m.source_components
            .clone()
            .unwrap_or_else(|| vec![m.source_ideal.clone()])
    } else {
        split_components(&m.source_ideal, &m.split_hints, &target_vars, budget)?
            .pieces
            .into_iter()
            .map(|p| p.ideal)
            .collect()
    };

    let mut strata = Vec::new();
    for (ci, comp) in components.iter().enumerate() {
        if comp.is_unit(budget)? {
            continue;
        }
        let h = dimension(comp, budget)?;
        let label = if tag.is_empty() {
            format!("component-{}", ci)
        } else {
            format!("{}:component-{}", tag, ci)
        };
        refine(m, comp, h, &label, cfg, &target_vars, &mut strata, 0)?;
    }
    Ok(strata)
}

#[allow(clippy::too_many_arguments)]
fn refine(
    m: &MapSpec,
    piece: &Ideal,
    h: i64,
    label: &str,
    cfg: &Config,
    target_vars: &[Poly],
    out: &mut Vec<Stratum>,
    depth: usize,
) -> Result<()> {
    let budget = &cfg.budget;
    let k = dimension(piece, budget)?;
    if k < 0 {
        return Ok(());
    }
    let image = m.image_closure_of(piece, budget)?;
    let r = dimension(&image, budget)?;
    let w = k - r;

    let restricted = m.with_source(piece.clone());
    let seed = cfg.derive_seed(&format!("jump:{}:{}", label, piece.canonical_print(budget)?));
    let jump = fibre_jump_locus(&restricted, (w + 1) as usize, seed, cfg)?;

    if jump.is_unit(budget)? {
        out.push(Stratum {
            closure_ideal: piece.clone(),
            excluded_ideal: None,
            image_ideal: image,
            k,
            r,
            w,
            h,
            component: label.to_string(),
            randomized: true,
        });
        return Ok(());
    }

    let pullback = piece.sum(&lift(&jump, m.ring())?)?;
    out.push(Stratum {
        closure_ideal: piece.clone(),
        excluded_ideal: Some(pullback.clone()),
        image_ideal: image,
        k,
        r,
        w,
        h,
        component: label.to_string(),
        randomized: true,
    });

    let sub = split_components(&pullback, &m.split_hints, target_vars, budget)?;
    for (pi, p) in sub.pieces.into_iter().enumerate() {
        // Randomization degeneracy guard: only strict descent recurses.
        if p.dim < k {
            let sub_label = format!("{}:jump{}-{}", label, depth, pi);
            refine(m, &p.ideal, h, &sub_label, cfg, target_vars, out, depth + 1)?;
        }
    }
    Ok(())
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

    fn kryw(strata: &[Stratum]) -> Vec<(i64, i64, i64, i64)> {
        let mut v: Vec<_> = strata.iter().map(|s| (s.k, s.r, s.w, s.h)).collect();
        v.sort();
        v
    }

    #[test]
    fn constant_rank_linear_projection() {
        // C^4 -> C^2: a single stratum k=4, r=2, w=2.
        let ring = Ring::rational(&["y1", "y2", "x1", "x2"]);
        let m = map(&ring, 2, &[]);
        let cfg = Config::default();
        let strata = rank_partition(&m, "", &cfg).unwrap();
        assert_eq!(kryw(&strata), vec![(4, 2, 2, 4)]);
    }

    #[test]
    fn blowup_chart_strata() {
        // (y1, t) -> (y1, y1 t): strata {k=2, r=2, w=0} and {k=1, r=0, w=1}.
        let ring = Ring::rational(&["y1", "y2", "t"]);
        let m = map(&ring, 2, &["y2 - y1*t"]);
        let cfg = Config::default();
        let strata = rank_partition(&m, "", &cfg).unwrap();
        assert_eq!(kryw(&strata), vec![(1, 0, 1, 2), (2, 2, 0, 2)]);
    }

    #[test]
    fn breakpoint_strata() {
        let ring = Ring::rational(&["y1", "y2", "x1", "x2"]);
        let m = map(&ring, 2, &["y1*x1 + y2*x2"]);
        let cfg = Config::default();
        let strata = rank_partition(&m, "", &cfg).unwrap();
        assert_eq!(kryw(&strata), vec![(2, 0, 2, 3), (3, 2, 1, 3)]);
    }
}
