//! Elimination, saturation and intersection via auxiliary variables.

use super::ideal::Ideal;
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::polycore::{MonomialOrder, Poly, Ring, RingMap};

/// Generators of I ∩ k[vars \ drop_block], computed with a block-elimination
/// order. The result lives in the smaller ring.
pub fn eliminate(ideal: &Ideal, drop_block: &[usize], budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    for &v in drop_block {
        if v >= ring.nvars() {
            return Err(Error::Precondition(format!(
                "eliminate: variable index {} out of range",
                v
            )));
        }
    }
    let keep: Vec<usize> = (0..ring.nvars())
        .filter(|i| !drop_block.contains(i))
        .collect();
    let small = ring.restrict(&keep);
    if ideal.is_zero_ideal() {
        return Ok(Ideal::zero(&small));
    }
    let order = MonomialOrder::elimination(drop_block.to_vec());
    let gb = ideal.groebner_basis(&order, budget)?;
    let proj = RingMap::projection(ring, &small, drop_block)?;
    let kept: Vec<Poly> = gb
        .iter()
        .filter(|p| p.support().iter().all(|v| !drop_block.contains(v)))
        .map(|p| p.map_ring(&proj))
        .collect::<Result<_>>()?;
    Ok(Ideal::new(&small, kept))
}

/// Saturation (I : g^∞): adjoin a fresh variable t with t·g − 1 and
/// eliminate t.
pub fn saturate(ideal: &Ideal, g: &Poly, budget: &Budget) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ZeroSaturation);
    }
    ideal.ring().check_same(g.ring())?;
    let ring = ideal.ring();
    let t_name = ring.fresh_name("t");
    let big = ring.extend(&[t_name]);
    let t_idx = big.nvars() - 1;
    let incl = RingMap::inclusion(ring, &big)?;
    let mut gens: Vec<Poly> = ideal
        .gens()
        .iter()
        .map(|p| p.map_ring(&incl))
        .collect::<Result<_>>()?;
    let t = Poly::var(&big, t_idx);
    let g_big = g.map_ring(&incl)?;
    gens.push(t.mul(&g_big)?.sub(&Poly::one(&big))?);
    let extended = Ideal::new(&big, gens);
    let eliminated = eliminate(&extended, &[t_idx], budget)?;
    // The eliminated ring has the same variables as the original.
    let back = RingMap::inclusion(eliminated.ring(), ring)?;
    eliminated.map_ring(&back)
}

/// Closure of V(I) minus V(J): intersection of the saturations by each
/// generator of J.
pub fn saturate_by_ideal(ideal: &Ideal, by: &Ideal, budget: &Budget) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for g in by.gens() {
        let s = saturate(ideal, g, budget)?;
        acc = Some(match acc {
            None => s,
            Some(prev) => intersect(&prev, &s, budget)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ideal.ring())))
}

/// I ∩ J via the fresh-variable construction ⟨t·I, (1−t)·J⟩ eliminated of t.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    a.ring().check_same(b.ring())?;
    let ring = a.ring();
    let t_name = ring.fresh_name("t");
    let big = ring.extend(&[t_name]);
    let t_idx = big.nvars() - 1;
    let incl = RingMap::inclusion(ring, &big)?;
    let t = Poly::var(&big, t_idx);
    let one_minus_t = Poly::one(&big).sub(&t)?;
    let mut gens: Vec<Poly> = Vec::new();
    for p in a.gens() {
        gens.push(t.mul(&p.map_ring(&incl)?)?);
    }
    for p in b.gens() {
        gens.push(one_minus_t.mul(&p.map_ring(&incl)?)?);
    }
    let extended = Ideal::new(&big, gens);
    let eliminated = eliminate(&extended, &[t_idx], budget)?;
    let back = RingMap::inclusion(eliminated.ring(), ring)?;
    eliminated.map_ring(&back)
}

/// Lift an ideal from a subring into a bigger ring by variable name.
pub fn lift(ideal: &Ideal, to: &Ring) -> Result<Ideal> {
    let incl = RingMap::inclusion(ideal.ring(), to)?;
    ideal.map_ring(&incl)
}

/// Whether g vanishes on V(I), i.e. g lies in the radical of I
/// (Rabinowitsch: 1 ∈ I + ⟨t·g − 1⟩).
pub fn radical_member(g: &Poly, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    ideal.ring().check_same(g.ring())?;
    if g.is_zero() {
        return Ok(true);
    }
    if ideal.contains(g, budget)? {
        return Ok(true);
    }
    let ring = ideal.ring();
    let t_name = ring.fresh_name("t");
    let big = ring.extend(&[t_name]);
    let t_idx = big.nvars() - 1;
    let incl = RingMap::inclusion(ring, &big)?;
    let mut gens: Vec<Poly> = ideal
        .gens()
        .iter()
        .map(|p| p.map_ring(&incl))
        .collect::<Result<_>>()?;
    let t = Poly::var(&big, t_idx);
    gens.push(t.mul(&g.map_ring(&incl)?)?.sub(&Poly::one(&big))?);
    Ideal::new(&big, gens).is_unit(budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_poly;

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(
            ring,
            gens.iter().map(|s| parse_poly(s, ring).unwrap()).collect(),
        )
    }

    #[test]
    fn parabola_projects_onto_line() {
        let ring = Ring::rational(&["y", "x"]);
        let budget = Budget::default();
        let i = ideal(&ring, &["y - x^2"]);
        let e = eliminate(&i, &[1], &budget).unwrap();
        assert!(e.is_zero_ideal());
        assert_eq!(e.ring().vars(), &["y".to_string()]);
    }

    #[test]
    fn twisted_cubic_projection() {
        let ring = Ring::rational(&["x", "y", "z"]);
        let budget = Budget::default();
        let i = ideal(&ring, &["x^2 - y", "x^3 - z"]);
        let e = eliminate(&i, &[0], &budget).unwrap();
        let small = e.ring().clone();
        let expect = Ideal::new(&small, vec![parse_poly("y^3 - z^2", &small).unwrap()]);
        assert!(e.equals(&expect, &budget).unwrap());
    }

    #[test]
    fn elimination_forces_origin()
    {
        let ring = Ring::rational(&["y1", "y2", "t"]);
        let budget = Budget::default();
        let i = ideal(&ring, &["y1*t - y2", "y1"]);
        let e = eliminate(&i, &[2], &budget).unwrap();
        let small = e.ring().clone();
        let expect = ideal(&small, &["y1", "y2"]);
        assert!(e.equals(&expect, &budget).unwrap());
    }

    #[test]
    fn monomial_saturation() {
        let ring = Ring::rational(&["y1", "x1"]);
        let budget = Budget::default();
        let i = ideal(&ring, &["y1*x1"]);
        let s = saturate(&i, &parse_poly("x1", &ring).unwrap(), &budget).unwrap();
        assert!(s.equals(&ideal(&ring, &["y1"]), &budget).unwrap());
    }

    #[test]
    fn divide_out_x() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let i = ideal(&ring, &["x^2*y", "x*y^2"]);
        let s = saturate(&i, &parse_poly("x", &ring).unwrap(), &budget).unwrap();
        assert!(s.equals(&ideal(&ring, &["y"]), &budget).unwrap());
    }

    #[test]
    fn saturation_by_unit_is_identity() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let i = ideal(&ring, &["x^2 - y"]);
        let s = saturate(&i, &Poly::one(&ring), &budget).unwrap();
        assert!(s.equals(&i, &budget).unwrap());
    }

    #[test]
    fn coprime_principal_intersection() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let a = ideal(&ring, &["x"]);
        let b = ideal(&ring, &["y"]);
        let c = intersect(&a, &b, &budget).unwrap();
        assert!(c.equals(&ideal(&ring, &["x*y"]), &budget).unwrap());
    }

    #[test]
    fn intersect_with_unit_is_identity() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let a = ideal(&ring, &["x^2 + y"]);
        let c = intersect(&a, &Ideal::unit(&ring), &budget).unwrap();
        assert!(c.equals(&a, &budget).unwrap());
    }

    #[test]
    fn containment_intersection() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let a = ideal(&ring, &["x", "y"]);
        let b = ideal(&ring, &["x"]);
        let c = intersect(&a, &b, &budget).unwrap();
        assert!(c.equals(&b, &budget).unwrap());
    }
}
