//! Randomized fibre-dimension jump loci.
//!
//! The closure of {y : dim f^{-1}(y) >= k} is over-approximated by slicing
//! the fibre block with k random affine-linear forms and eliminating; the
//! spurious part of each slice is removed by intersecting the varieties of
//! r independent repetitions (summing the eliminated ideals). Within one
//! repetition the forms are drawn sequentially, so the slices at level k are
//! a prefix of the slices at level k+1 and the returned loci shrink as k
//! grows.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::mapspec::MapSpec;
use crate::config::{derive_seed, Config};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polycore::{Coefficient, Poly};

/// Ideal in the Y-ring defining (an over-approximation of) the locus of
/// target points whose fibre has dimension at least k. Deterministic given
/// the seed.
pub fn fibre_jump_locus(m: &MapSpec, k: usize, seed: u64, cfg: &Config) -> Result<Ideal> {
    if !m.is_affine() {
        return Err(Error::Precondition(
            "fibre_jump_locus requires an affine (chart-expanded) map".into(),
        ));
    }
    if k < 1 {
        return Err(Error::Precondition("jump level k must be >= 1".into()));
    }
    let ring = m.ring().clone();
    let domain = ring.domain();
    let fibre = m.fibre_var_indices();
    let bound = cfg.slice_bound;
    let budget = &cfg.budget;

    let mut total = Ideal::zero(m.y_ring());
    for rep in 0..cfg.slice_reps.max(1) {
        let rep_seed = derive_seed(seed, &format!("slice-rep-{}", rep));
        let mut rng = ChaCha8Rng::seed_from_u64(rep_seed);
        let mut forms: Vec<Poly> = Vec::with_capacity(k);
        while forms.len() < k {
            let mut p = Poly::from_int(&ring, rng.gen_range(-bound..=bound));
            for &v in &fibre {
                let c = rng.gen_range(-bound..=bound);
                if c != 0 {
                    let term = Poly::var(&ring, v).scale(&Coefficient::from_int(c, domain));
                    p = p.add(&term)?;
                }
            }
            if !p.is_zero() {
                forms.push(p);
            }
        }
        let sliced = m.source_ideal.with_extra(&forms);
        let eliminated = m.image_closure_of(&sliced, budget)?;
        total = total.sum(&eliminated)?;
    }
    total.canonicalize(budget)
}
