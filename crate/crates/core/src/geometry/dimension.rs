//! Krull dimension via independent variable sets modulo the leading-term
//! ideal of a grevlex Gröbner basis.

use crate::config::Budget;
use crate::error::Result;
use crate::groebner::Ideal;
use crate::polycore::CANONICAL_ORDER;

/// Dimension of V(I): the size of the largest variable subset S such that no
/// leading monomial of the reduced grevlex basis is supported inside S.
/// Equivalently n minus a minimum hitting set of the supports. Returns -1
/// for the unit ideal.
pub fn dimension(ideal: &Ideal, budget: &Budget) -> Result<i64> {
    let n = ideal.ring().nvars();
    if ideal.is_zero_ideal() {
        return Ok(n as i64);
    }
    let gb = ideal.groebner_basis(&CANONICAL_ORDER, budget)?;
    let mut supports: Vec<Vec<usize>> = Vec::with_capacity(gb.len());
    for p in gb.iter() {
        let (lm, _) = p.leading_term(&CANONICAL_ORDER).expect("nonzero");
        let s = lm.support();
        if s.is_empty() {
            return Ok(-1); // a constant leading term: unit ideal
        }
        supports.push(s);
    }
    // Dominated supports never constrain the minimum hitting set.
    supports.sort_by_key(|s| s.len());
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for s in supports {
        if !kept.iter().any(|k| k.iter().all(|v| s.contains(v))) {
            kept.push(s);
        }
    }
    let mut best = usize::MAX;
    let mut chosen = vec![false; n];
    hit(&kept, 0, 0, &mut chosen, &mut best);
    Ok(n as i64 - best as i64)
}

fn hit(supports: &[Vec<usize>], idx: usize, size: usize, chosen: &mut Vec<bool>, best: &mut usize) {
    if size >= *best {
        return;
    }
    // Find the first support not yet hit.
    let mut target = None;
    for s in &supports[idx.min(supports.len())..] {
        if !s.iter().any(|&v| chosen[v]) {
            target = Some(s);
            break;
        }
    }
    let target = match target {
        None => {
            *best = size;
            return;
        }
        Some(t) => t,
    };
    for &v in target {
        if !chosen[v] {
            chosen[v] = true;
            hit(supports, idx, size + 1, chosen, best);
            chosen[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, Ring};

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(
            ring,
            gens.iter().map(|s| parse_poly(s, ring).unwrap()).collect(),
        )
    }

    #[test]
    fn whole_space() {
        let ring = Ring::rational(&["x", "y", "z"]);
        let budget = Budget::default();
        assert_eq!(dimension(&Ideal::zero(&ring), &budget).unwrap(), 3);
    }

    #[test]
    fn irreducible_hypersurface() {
        let ring = Ring::rational(&["y1", "y2", "x1", "x2"]);
        let budget = Budget::default();
        assert_eq!(
            dimension(&ideal(&ring, &["y1*x1 + y2*x2"]), &budget).unwrap(),
            3
        );
    }

    #[test]
    fn cross_of_two_planes() {
        let ring = Ring::rational(&["y1", "y2", "y3", "y4"]);
        let budget = Budget::default();
        let cross = ideal(&ring, &["y1*y3", "y1*y4", "y2*y3", "y2*y4"]);
        assert_eq!(dimension(&cross, &budget).unwrap(), 2);
    }

    #[test]
    fn unit_ideal_is_empty() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        assert_eq!(dimension(&Ideal::unit(&ring), &budget).unwrap(), -1);
        // Unit in disguise.
        let hidden = ideal(&ring, &["x + 1", "x"]);
        assert_eq!(dimension(&hidden, &budget).unwrap(), -1);
    }

    #[test]
    fn points_have_dimension_zero() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        assert_eq!(dimension(&ideal(&ring, &["x", "y"]), &budget).unwrap(), 0);
    }
}
