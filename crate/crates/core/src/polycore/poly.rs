//! Sparse multivariate polynomials in canonical form.
//!
//! Terms are stored strictly descending under grevlex, with no zero
//! coefficients, so structural equality is polynomial equality. Leading
//! terms under other orders are computed on demand.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::coeff::{CoeffDomain, Coefficient};
use super::monomial::{Monomial, MonomialOrder};
use super::ring::{Ring, RingMap};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    /// (monomial, coefficient), strictly descending grevlex, no zeros.
    terms: Vec<(Monomial, Coefficient)>,
}

pub const CANONICAL_ORDER: MonomialOrder = MonomialOrder::GrevLex;

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, Coefficient::one(ring.domain()))
    }

    pub fn constant(ring: &Ring, c: Coefficient) -> Poly {
        if c.is_zero() {
            return Poly::zero(ring);
        }
        Poly {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn from_int(ring: &Ring, n: i64) -> Poly {
        Poly::constant(ring, Coefficient::from_int(n, ring.domain()))
    }

    pub fn var(ring: &Ring, idx: usize) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: vec![(
                Monomial::var(ring.nvars(), idx),
                Coefficient::one(ring.domain()),
            )],
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs; collects like
    /// terms and drops zeros.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Coefficient)>) -> Poly {
        let mut terms = terms;
        terms.sort_by(|a, b| CANONICAL_ORDER.cmp(&b.0, &a.0));
        let domain = ring.domain();
        let mut out: Vec<(Monomial, Coefficient)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c, domain);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Variable indices occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        let mut seen = vec![false; n];
        for (m, _) in &self.terms {
            for i in 0..n {
                if m.0[i] > 0 {
                    seen[i] = true;
                }
            }
        }
        (0..n).filter(|&i| seen[i]).collect()
    }

    /// Highest exponent of variable `v`.
    pub fn degree_in_var(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coefficient)> {
        if *order == CANONICAL_ORDER {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let domain = self.ring.domain();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match CANONICAL_ORDER.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { cb.neg(domain) } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        ca.sub(cb, domain)
                    } else {
                        ca.add(cb, domain)
                    };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| {
            let c = if negate { c.neg(domain) } else { c.clone() };
            (m.clone(), c)
        }));
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Poly {
        let domain = self.ring.domain();
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg(domain)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        let domain = self.ring.domain();
        let mut acc = Poly::zero(&self.ring);
        for (m, c) in &other.terms {
            let part = Poly {
                ring: self.ring.clone(),
                terms: self
                    .terms
                    .iter()
                    .map(|(sm, sc)| (sm.mul(m), sc.mul(c, domain)))
                    .collect(),
            };
            // Multiplying by a monomial preserves grevlex sortedness.
            acc = acc.merge(&part, false);
        }
        Ok(acc)
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let domain = self.ring.domain();
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(sm, sc)| (sm.mul(m), sc.mul(c, domain)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let domain = self.ring.domain();
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, sc)| (m.clone(), sc.mul(c, domain)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Monic form under the given order (field coefficient domains).
    pub fn monic(&self, order: &MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv(self.ring.domain()).expect("nonzero leading coeff");
                self.scale(&inv)
            }
        }
    }

    /// GCD of all monomials (the monomial content).
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |acc, (m, _)| acc.gcd(m)))
    }

    /// Clear denominators and integer content; flip sign so the canonical
    /// leading coefficient is positive. Rational domain only; used to keep
    /// generators small.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() || self.ring.domain() != CoeffDomain::Rational {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            let r = c.as_rational().expect("rational domain");
            den = den.lcm(r.denom());
        }
        let mut nums: Vec<BigInt> = self
            .terms
            .iter()
            .map(|(_, c)| {
                let r = c.as_rational().unwrap();
                r.numer() * (&den / r.denom())
            })
            .collect();
        let mut g = BigInt::zero();
        for n in &nums {
            g = g.gcd(n);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        if nums.first().map(|n| n.is_negative()).unwrap_or(false) {
            g = -g;
        }
        for n in &mut nums {
            *n = &*n / &g;
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .zip(nums)
                .map(|((m, _), n)| (m.clone(), Coefficient::from_bigint(n, CoeffDomain::Rational)))
                .collect(),
        }
    }

    /// Divide out the monomial content, returning the primitive cofactor.
    pub fn strip_monomial_content(&self) -> Poly {
        match self.monomial_content() {
            None => self.clone(),
            Some(content) => {
                if content.is_one() {
                    return self.clone();
                }
                Poly {
                    ring: self.ring.clone(),
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, c)| (content.div_into(m), c.clone()))
                        .collect(),
                }
            }
        }
    }

    /// Transport along a ring map. Fails when a dropped variable occurs.
    pub fn map_ring(&self, map: &RingMap) -> Result<Poly> {
        self.ring.check_same(&map.from)?;
        let n_to = map.to.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n_to];
            for (i, &exp) in m.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                match map.map[i] {
                    Some(j) => e[j] += exp,
                    None => {
                        return Err(Error::RingMismatch(format!(
                            "variable `{}` dropped by ring map",
                            self.ring.var_name(i)
                        )))
                    }
                }
            }
            terms.push((Monomial(e), c.clone()));
        }
        Ok(Poly::from_terms(&map.to, terms))
    }

    /// Substitute a constant for one variable, into the smaller ring `to`
    /// (the rings must agree elsewhere, by name).
    pub fn substitute(&self, var: usize, value: &Coefficient, to: &Ring) -> Result<Poly> {
        let domain = self.ring.domain();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = Vec::with_capacity(to.nvars());
            for (i, &exp) in m.0.iter().enumerate() {
                if i == var {
                    for _ in 0..exp {
                        coeff = coeff.mul(value, domain);
                    }
                } else {
                    e.push(exp);
                }
            }
            terms.push((Monomial(e), coeff));
        }
        Ok(Poly::from_terms(to, terms))
    }

    /// Reduce all coefficients mod q, into the parallel prime-field ring.
    pub fn reduce_mod(&self, q: u64, to: &Ring) -> Result<Poly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), c.reduce_mod(q)?));
        }
        Ok(Poly::from_terms(to, terms))
    }

    /// Whether every term has the same total degree in the given variables.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree_in(vars));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let domain = self.ring.domain();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = match c {
                Coefficient::Rat(r) if r.is_negative() => ("-", c.neg(domain)),
                _ => ("+", c.clone()),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                parts.push(format!("{}", mag));
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    parts.push(self.ring.var_name(v).to_string());
                } else if e > 1 {
                    parts.push(format!("{}^{}", self.ring.var_name(v), e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse::parse_poly;

    #[test]
    fn canonical_merge_and_cancel() {
        let ring = Ring::rational(&["x", "y"]);
        let a = parse_poly("x^2 - y", &ring).unwrap();
        let b = parse_poly("x^2 - y", &ring).unwrap();
        assert!(a.sub(&b).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let ring = Ring::rational(&["x", "y"]);
        let a = parse_poly("x + y", &ring).unwrap();
        let b = parse_poly("x - y", &ring).unwrap();
        let expect = parse_poly("x^2 - y^2", &ring).unwrap();
        assert_eq!(a.mul(&b).unwrap(), expect);
    }

    #[test]
    fn add_zero_is_identity() {
        let ring = Ring::rational(&["x", "y"]);
        let p = parse_poly("3*x*y - 7", &ring).unwrap();
        assert_eq!(p.add(&Poly::zero(&ring)).unwrap(), p);
    }

    #[test]
    fn ring_mismatch_detected() {
        let r1 = Ring::rational(&["x"]);
        let r2 = Ring::rational(&["y"]);
        let p = Poly::var(&r1, 0);
        let q = Poly::var(&r2, 0);
        assert!(p.add(&q).is_err());
    }

    #[test]
    fn display_round_trip() {
        let ring = Ring::rational(&["x", "y"]);
        let p = parse_poly("-2*x^2*y + x - 5", &ring).unwrap();
        let printed = p.to_string();
        assert_eq!(parse_poly(&printed, &ring).unwrap(), p);
    }

    #[test]
    fn primitive_part_clears_denominators() {
        let ring = Ring::rational(&["x"]);
        let p = parse_poly("x^2 - 1", &ring)
            .unwrap()
            .scale(&Coefficient::from_int(1, CoeffDomain::Rational)
                .div(&Coefficient::from_int(2, CoeffDomain::Rational), CoeffDomain::Rational)
                .unwrap());
        let pp = p.primitive_part();
        assert_eq!(pp, parse_poly("x^2 - 1", &ring).unwrap());
    }
}
