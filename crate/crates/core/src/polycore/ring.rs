//! Variable rings and the maps between them.
//!
//! A ring is an immutable ordered list of variable names plus a coefficient
//! domain. Polynomials never migrate rings implicitly; fibred powers and
//! eliminations build explicit `RingMap`s.

use std::sync::Arc;

use super::coeff::CoeffDomain;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    vars: Vec<String>,
    domain: CoeffDomain,
}

/// Shared immutable ring handle. Two handles are equal when their variable
/// lists and domains agree.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Ring {}

impl Ring {
    pub fn new(vars: Vec<String>, domain: CoeffDomain) -> Ring {
        Ring(Arc::new(RingData { vars, domain }))
    }

    pub fn rational(vars: &[&str]) -> Ring {
        Ring::new(
            vars.iter().map(|s| s.to_string()).collect(),
            CoeffDomain::Rational,
        )
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn domain(&self) -> CoeffDomain {
        self.0.domain
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.0.vars[idx]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.vars().join(","),
                other.vars().join(",")
            )))
        }
    }

    /// New ring with extra variables appended.
    pub fn extend(&self, extra: &[String]) -> Ring {
        let mut vars = self.0.vars.clone();
        vars.extend_from_slice(extra);
        Ring::new(vars, self.0.domain)
    }

    /// New ring keeping only the named indices, in their current order.
    pub fn restrict(&self, keep: &[usize]) -> Ring {
        let vars = keep.iter().map(|&i| self.0.vars[i].clone()).collect();
        Ring::new(vars, self.0.domain)
    }

    /// A variable name not already present: `base` with primes appended.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.var_index(&name).is_some() {
            name.push('\'');
        }
        name
    }
}

/// Variable-index translation between two rings: `map[i]` is the index in
/// `to` of variable `i` of `from`, or None when the variable is dropped.
#[derive(Debug, Clone)]
pub struct RingMap {
    pub from: Ring,
    pub to: Ring,
    pub map: Vec<Option<usize>>,
}

impl RingMap {
    /// Inclusion by variable name: every `from` variable must exist in `to`.
    pub fn inclusion(from: &Ring, to: &Ring) -> Result<RingMap> {
        let map = from
            .vars()
            .iter()
            .map(|v| {
                to.var_index(v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(RingMap {
            from: from.clone(),
            to: to.clone(),
            map: map.into_iter().map(Some).collect(),
        })
    }

    /// Projection dropping the given `from`-indices; surviving variables map
    /// by name into `to`.
    pub fn projection(from: &Ring, to: &Ring, drop: &[usize]) -> Result<RingMap> {
        let map = from
            .vars()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if drop.contains(&i) {
                    Ok(None)
                } else {
                    to.var_index(v)
                        .map(Some)
                        .ok_or_else(|| Error::UnknownVariable(v.clone()))
                }
            })
            .collect::<Result<Vec<Option<usize>>>>()?;
        Ok(RingMap {
            from: from.clone(),
            to: to.clone(),
            map,
        })
    }

    /// Explicit index mapping.
    pub fn explicit(from: &Ring, to: &Ring, map: Vec<Option<usize>>) -> RingMap {
        RingMap {
            from: from.clone(),
            to: to.clone(),
            map,
        }
    }
}
