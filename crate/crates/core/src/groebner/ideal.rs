//! Ideals with a write-once Gröbner basis cache per monomial order.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::buchberger::reduced_groebner_basis;
use super::division::normal_form;
use crate::config::Budget;
use crate::error::Result;
use crate::polycore::{MonomialOrder, Poly, Ring, RingMap, CANONICAL_ORDER};

#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Poly>>>>>,
}

impl PartialEq for Ideal {
    /// Structural equality of generator lists (not ideal equality; see
    /// [`Ideal::equals`]).
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}
impl Eq for Ideal {}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Poly>) -> Ideal {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.primitive_part())
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Poly::one(ring)])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis under the order, cached write-once.
    pub fn groebner_basis(&self, order: &MonomialOrder, budget: &Budget) -> Result<Arc<Vec<Poly>>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some(gb) = cache.get(order) {
                return Ok(gb.clone());
            }
        }
        let gb = Arc::new(reduced_groebner_basis(&self.gens, order, budget)?);
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(order.clone()).or_insert(gb).clone())
    }

    /// Membership test: normal form against the reduced basis is zero.
    pub fn contains(&self, p: &Poly, budget: &Budget) -> Result<bool> {
        self.ring.check_same(p.ring())?;
        if p.is_zero() {
            return Ok(true);
        }
        if self.gens.is_empty() {
            return Ok(false);
        }
        let gb = self.groebner_basis(&CANONICAL_ORDER, budget)?;
        Ok(normal_form(p, &gb, &CANONICAL_ORDER, budget)?.is_zero())
    }

    /// Whether 1 lies in the ideal (empty variety).
    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        if self.gens.is_empty() {
            return Ok(false);
        }
        if self.gens.iter().any(|g| g.is_constant() && !g.is_zero()) {
            return Ok(true);
        }
        let gb = self.groebner_basis(&CANONICAL_ORDER, budget)?;
        Ok(gb.iter().any(|g| g.is_constant() && !g.is_zero()))
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality by mutual membership of generators.
    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        Ok(self.contains_ideal(other, budget)? && other.contains_ideal(self, budget)?)
    }

    /// Sum of ideals (concatenated generators).
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, gens))
    }

    pub fn with_extra(&self, extra: &[Poly]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Transport generators along a ring map.
    pub fn map_ring(&self, map: &RingMap) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_ring(map))
            .collect::<Result<Vec<Poly>>>()?;
        Ok(Ideal::new(&map.to, gens))
    }

    /// Canonical one-line presentation: reduced grevlex basis, printed.
    pub fn canonical_print(&self, budget: &Budget) -> Result<String> {
        let gb = self.groebner_basis(&CANONICAL_ORDER, budget)?;
        let parts: Vec<String> = gb.iter().map(|p| p.to_string()).collect();
        Ok(format!("<{}>", parts.join(", ")))
    }

    /// Rebuild the generator list from the reduced grevlex basis.
    pub fn canonicalize(&self, budget: &Budget) -> Result<Ideal> {
        let gb = self.groebner_basis(&CANONICAL_ORDER, budget)?;
        Ok(Ideal::new(&self.ring, gb.as_ref().clone()))
    }
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
    fn membership_basics() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let i = ideal(&ring, &["x", "y"]);
        assert!(i.contains(&parse_poly("x", &ring).unwrap(), &budget).unwrap());
        assert!(!i
            .contains(&parse_poly("x + 1", &ring).unwrap(), &budget)
            .unwrap());
    }

    #[test]
    fn cross_ideal_membership() {
        // Example: y1*y3 lies in the cross ideal.
        let ring = Ring::rational(&["y1", "y2", "y3", "y4"]);
        let budget = Budget::default();
        let cross = ideal(&ring, &["y1*y3", "y1*y4", "y2*y3", "y2*y4"]);
        assert!(cross
            .contains(&parse_poly("y1*y3", &ring).unwrap(), &budget)
            .unwrap());
        assert!(!cross
            .contains(&parse_poly("y1*y2", &ring).unwrap(), &budget)
            .unwrap());
    }

    #[test]
    fn equality_is_an_equivalence() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let a = ideal(&ring, &["x + y", "x - y"]);
        let b = ideal(&ring, &["x", "y"]);
        let c = ideal(&ring, &["y", "x", "x + y"]);
        assert!(a.equals(&a, &budget).unwrap());
        assert!(a.equals(&b, &budget).unwrap());
        assert!(b.equals(&c, &budget).unwrap());
        assert!(a.equals(&c, &budget).unwrap());
    }
}
