//! Independent finite-field dimension oracle: exhaustive point counts of
//! V(I)(F_q) for small primes, with the dimension read off the growth of
//! the counts.

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polycore::{CoeffDomain, Coefficient, Poly, Ring};

pub const ORACLE_PRIMES: [u64; 3] = [3, 5, 7];
const MAX_SEARCH_SPACE: u128 = 100_000_000;

/// Exhaustive count of V(I)(F_q); coefficients are reduced mod q.
pub fn count_points(ideal: &Ideal, q: u64) -> Result<u64> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let space = (q as u128).pow(n as u32);
    if space > MAX_SEARCH_SPACE {
        return Err(Error::SearchSpaceTooLarge(space));
    }
    let fq_ring = Ring::new(ring.vars().to_vec(), CoeffDomain::PrimeField(q));
    let mut gens: Vec<Poly> = Vec::with_capacity(ideal.gens().len());
    for g in ideal.gens() {
        gens.push(g.reduce_mod(q, &fq_ring)?);
    }
    if gens.iter().any(|g| g.is_constant() && !g.is_zero()) {
        return Ok(0);
    }
    gens.retain(|g| !g.is_zero());
    if gens.is_empty() {
        return Ok(space as u64);
    }

    // Precompute value^exp tables per generator term layout.
    let mut point = vec![0u64; n];
    let mut count = 0u64;
    'outer: loop {
        let mut vanishes = true;
        for g in &gens {
            let mut acc: u64 = 0;
            for (m, c) in g.terms() {
                let mut t = match c {
                    Coefficient::Mod(v) => *v,
                    Coefficient::Rat(_) => unreachable!("reduced mod q"),
                };
                for (v, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        t = t * pow_mod(point[v], e, q) % q;
                    }
                }
                acc = (acc + t) % q;
            }
            if acc != 0 {
                vanishes = false;
                break;
            }
        }
        if vanishes {
            count += 1;
        }
        // Odometer increment.
        for i in 0..n {
            point[i] += 1;
            if point[i] < q {
                continue 'outer;
            }
            point[i] = 0;
        }
        break;
    }
    Ok(count)
}

fn pow_mod(mut base: u64, mut e: u32, q: u64) -> u64 {
    base %= q;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    acc
}

/// Counts V(I)(F_q) for each prime and estimates the dimension as the
/// rounded slope of log(count) against log(q). Returns -1 for an (apparent)
/// empty variety.
pub fn ff_dim_estimate(ideal: &Ideal, primes: &[u64]) -> Result<(i64, Vec<(u64, u64)>)> {
    let mut counts = Vec::with_capacity(primes.len());
    for &q in primes {
        counts.push((q, count_points(ideal, q)?));
    }
    let pts: Vec<(f64, f64)> = counts
        .iter()
        .filter(|(_, c)| *c > 0)
        .map(|(q, c)| ((*q as f64).ln(), (*c as f64).ln()))
        .collect();
    let estimate = if pts.is_empty() {
        -1
    } else if pts.len() == 1 {
        (pts[0].1 / pts[0].0).round() as i64
    } else {
        let n = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        ((n * sxy - sx * sy) / (n * sxx - sx * sx)).round() as i64
    };
    Ok((estimate, counts))
}

/// Soft reducibility alarm: an irreducible variety of dimension k has about
/// q^k points, while c hidden same-dimensional components have about c·q^k.
/// Returns None when the oracle cannot run (space too large, bad
/// denominators, dimension unknown).
pub fn suspect_hidden_component(ideal: &Ideal, dim: i64, _budget: &Budget) -> Option<bool> {
    if dim < 0 {
        return Some(false);
    }
    // A linear variety is irreducible outright.
    if ideal.gens().iter().all(|g| g.total_degree() <= 1) {
        return Some(false);
    }
    let n = ideal.ring().nvars() as u32;
    let mut ratios = Vec::new();
    for &q in &ORACLE_PRIMES {
        if (q as u128).pow(n) > 400_000 {
            continue;
        }
        match count_points(ideal, q) {
            Ok(c) => {
                let expected = (q as f64).powi(dim as i32);
                ratios.push(c as f64 / expected);
            }
            Err(_) => return None,
        }
    }
    if ratios.is_empty() {
        return None;
    }
    Some(ratios.iter().all(|&r| r >= 1.8))
}
