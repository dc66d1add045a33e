//! Engine configuration: step budget, randomization parameters, seeds.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const DEFAULT_SLICE_BOUND: i64 = 1000;
pub const DEFAULT_SLICE_REPS: u32 = 3;

/// Shared reduction-step budget. Every single-term reduction in the Gröbner
/// engine counts as one step; exhaustion is a reported error, not a hang.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: Arc<AtomicU64>,
}

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget {
            limit,
            used: Arc::new(AtomicU64::new(0)),
        }
    }

    pub fn charge(&self, steps: u64) -> Result<()> {
        let before = self.used.fetch_add(steps, Ordering::Relaxed);
        if before + steps > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

/// Analysis options threaded through geometry and analysis operations.
#[derive(Debug, Clone)]
pub struct Config {
    pub seed: u64,
    pub budget: Budget,
    /// Random slice coefficients are drawn uniformly from [-slice_bound, slice_bound].
    pub slice_bound: i64,
    /// Independent slice repetitions per jump-locus query.
    pub slice_reps: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            budget: Budget::default(),
            slice_bound: DEFAULT_SLICE_BOUND,
            slice_reps: DEFAULT_SLICE_REPS,
        }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Config {
        Config {
            seed,
            ..Config::default()
        }
    }

    /// Deterministic sub-seed bound to a context label.
    pub fn derive_seed(&self, label: &str) -> u64 {
        derive_seed(self.seed, label)
    }
}

/// FNV-1a over the label folded into the base seed via splitmix64.
pub fn derive_seed(base: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in label.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    splitmix64(base ^ h)
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_trips() {
        let b = Budget::new(10);
        assert!(b.charge(6).is_ok());
        assert!(b.charge(4).is_ok());
        assert!(b.charge(1).is_err());
    }

    #[test]
    fn seed_derivation_deterministic() {
        assert_eq!(derive_seed(7, "jump"), derive_seed(7, "jump"));
        assert_ne!(derive_seed(7, "jump"), derive_seed(7, "count"));
        assert_ne!(derive_seed(7, "jump"), derive_seed(8, "jump"));
    }
}
