//! Generic fibre cardinality and the lower bound from the rank partition.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{derive_seed, Budget, Config};
use crate::error::{Error, Result};
use crate::geometry::{dimension, MapSpec};
use crate::groebner::{eliminate, Ideal};
use crate::polycore::{Coefficient, Monomial, Poly, CANONICAL_ORDER};

use super::stratum::Stratum;

/// Number of points of a generic fibre: specializes the target variables at
/// a random integer point, requires the specialized system to be
/// zero-dimensional, and counts distinct solutions via the staircase of the
/// radicalized ideal. Two independent points must agree.
pub fn generic_fibre_count(m: &MapSpec, seed: u64, cfg: &Config) -> Result<usize> {
    if !m.target_components.is_empty() {
        return Err(Error::Precondition(
            "generic_fibre_count requires the target C^d".into(),
        ));
    }
    let budget = &cfg.budget;
    let mut first: Option<usize> = None;
    let mut failures = 0;
    for attempt in 0..16 {
        let pt_seed = derive_seed(seed, &format!("fibre-point-{}", attempt));
        let mut rng = ChaCha8Rng::seed_from_u64(pt_seed);
        let point: Vec<i64> = (0..m.d())
            .map(|_| rng.gen_range(-cfg.slice_bound..=cfg.slice_bound))
            .collect();
        match fibre_count_at(m, &point, budget)? {
            None => {
                failures += 1;
                if failures >= 5 {
                    return Err(Error::NotZeroDimensional(1));
                }
            }
            Some(c) => match first {
                None => first = Some(c),
                Some(c1) => {
                    if c1 != c {
                        return Err(Error::CountDisagreement(c1, c));
                    }
                    return Ok(c1);
                }
            },
        }
    }
    Err(Error::NotZeroDimensional(1))
}

/// Count the fibre over an explicit rational target point. Projective
/// blocks are counted cell by cell (the dehomogenized chart plus its point
/// at infinity) so projective solutions are not double-counted. Returns
/// None when some cell fails to be zero-dimensional.
pub fn fibre_count_at(m: &MapSpec, point: &[i64], budget: &Budget) -> Result<Option<usize>> {
    if point.len() != m.d() {
        return Err(Error::Precondition("specialization point arity".into()));
    }
    let blocks = m.projective_blocks.clone();
    let mut total = 0usize;
    for mask in 0..(1u64 << blocks.len()) {
        // Cell: per block, either {second var = 1} or {first var = 1,
        // second var = 0}; these two cells partition P^1.
        let mut subs: Vec<(String, i64)> = Vec::new();
        for (bi, &(a, b)) in blocks.iter().enumerate() {
            if (mask >> bi) & 1 == 0 {
                subs.push((m.ring().var_name(b).to_string(), 1));
            } else {
                subs.push((m.ring().var_name(a).to_string(), 1));
                subs.push((m.ring().var_name(b).to_string(), 0));
            }
        }
        for (i, &v) in point.iter().enumerate() {
            subs.push((m.ring().var_name(i).to_string(), v));
        }
        let specialized = substitute_values(&m.source_ideal, &subs)?;
        match cell_count(&specialized, budget)? {
            None => return Ok(None),
            Some(c) => total += c,
        }
    }
    Ok(Some(total))
}

fn substitute_values(ideal: &Ideal, subs: &[(String, i64)]) -> Result<Ideal> {
    let mut ring = ideal.ring().clone();
    let mut gens = ideal.gens().to_vec();
    for (name, value) in subs {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
        let keep: Vec<usize> = (0..ring.nvars()).filter(|&i| i != idx).collect();
        let small = ring.restrict(&keep);
        let c = Coefficient::from_int(*value, ring.domain());
        gens = gens
            .iter()
            .map(|g| g.substitute(idx, &c, &small))
            .collect::<Result<_>>()?;
        ring = small;
    }
    Ok(Ideal::new(&ring, gens))
}

/// Distinct-solution count of a zero-dimensional affine system; None when
/// the system has positive dimension.
fn cell_count(ideal: &Ideal, budget: &Budget) -> Result<Option<usize>> {
    if ideal.is_unit(budget)? {
        return Ok(Some(0));
    }
    let n = ideal.ring().nvars();
    if n == 0 {
        return Ok(Some(1));
    }
    let dim = dimension(ideal, budget)?;
    if dim != 0 {
        return Ok(if dim < 0 { Some(0) } else { None });
    }
    // Radicalize: adjoin the squarefree part of each univariate eliminant.
    let mut radical = ideal.clone();
    for v in 0..n {
        let others: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        let eliminant = eliminate(ideal, &others, budget)?;
        let g = match eliminant.gens().first() {
            Some(g) => g.clone(),
            None => {
                return Err(Error::InternalContradiction(
                    "zero-dimensional system without univariate eliminant".into(),
                ))
            }
        };
        let coeffs = univariate_coeffs(&g, 0)?;
        let sq = squarefree_part(&coeffs);
        let back = poly_from_univariate(&sq, ideal.ring(), v);
        radical = radical.with_extra(&[back]);
    }
    Ok(Some(staircase_count(&radical, budget)?))
}

/// Number of standard monomials of a zero-dimensional ideal.
fn staircase_count(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    let gb = ideal.groebner_basis(&CANONICAL_ORDER, budget)?;
    let n = ideal.ring().nvars();
    let lts: Vec<Monomial> = gb
        .iter()
        .map(|p| p.leading_term(&CANONICAL_ORDER).expect("nonzero").0.clone())
        .collect();
    // Per-variable pure-power bounds (they exist in a zero-dimensional LT
    // ideal).
    let mut bounds = vec![0u32; n];
    for v in 0..n {
        let pure = lts
            .iter()
            .filter(|m| m.support() == [v])
            .map(|m| m.0[v])
            .min();
        match pure {
            Some(e) => bounds[v] = e,
            None => {
                return Err(Error::InternalContradiction(
                    "staircase unbounded in some variable".into(),
                ))
            }
        }
    }
    let mut count = 0usize;
    let mut exps = vec![0u32; n];
    'outer: loop {
        let mono = Monomial(exps.clone());
        if !lts.iter().any(|lt| lt.divides(&mono)) {
            count += 1;
        }
        for i in 0..n {
            exps[i] += 1;
            if exps[i] < bounds[i] {
                continue 'outer;
            }
            exps[i] = 0;
        }
        break;
    }
    Ok(count)
}

/// Coefficient vector (by degree) of a univariate polynomial in variable v.
fn univariate_coeffs(p: &Poly, v: usize) -> Result<Vec<BigRational>> {
    let deg = p.degree_in_var(v) as usize;
    let mut out = vec![BigRational::zero(); deg + 1];
    for (m, c) in p.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            if i != v && e > 0 {
                return Err(Error::Precondition("polynomial not univariate".into()));
            }
        }
        let r = c
            .as_rational()
            .ok_or(Error::DomainMismatch)?
            .clone();
        out[m.0[v] as usize] = r;
    }
    Ok(out)
}

fn poly_from_univariate(coeffs: &[BigRational], ring: &crate::polycore::Ring, v: usize) -> Poly {
    let terms: Vec<(Monomial, Coefficient)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| {
            let mut exps = vec![0u32; ring.nvars()];
            exps[v] = e as u32;
            (Monomial(exps), Coefficient::Rat(c.clone()))
        })
        .collect();
    Poly::from_terms(ring, terms)
}

fn uni_deg(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn uni_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    match uni_deg(&p) {
        None => vec![],
        Some(d) => {
            p.truncate(d + 1);
            p
        }
    }
}

fn uni_monic(p: &[BigRational]) -> Vec<BigRational> {
    match uni_deg(p) {
        None => vec![],
        Some(d) => {
            let lead = p[d].clone();
            p.iter().map(|c| c / &lead).collect()
        }
    }
}

fn uni_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = uni_deg(b).expect("division by zero polynomial");
    let mut r = a.to_vec();
    while let Some(dr) = uni_deg(&r) {
        if dr < db {
            break;
        }
        let factor = &r[dr] / &b[db];
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            let delta = &factor * bc;
            r[i + shift] = &r[i + shift] - delta;
        }
    }
    uni_trim(r)
}

fn uni_div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = uni_deg(b).expect("division by zero polynomial");
    let mut r = a.to_vec();
    let da = match uni_deg(&r) {
        None => return vec![],
        Some(d) => d,
    };
    let mut q = vec![BigRational::zero(); da - db + 1];
    while let Some(dr) = uni_deg(&r) {
        if dr < db {
            break;
        }
        let factor = &r[dr] / &b[db];
        let shift = dr - db;
        q[shift] = factor.clone();
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            let delta = &factor * bc;
            r[i + shift] = &r[i + shift] - delta;
        }
    }
    debug_assert!(uni_deg(&r).is_none(), "inexact univariate division");
    q
}

fn uni_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a = uni_trim(a.to_vec());
    let mut b = uni_trim(b.to_vec());
    while uni_deg(&b).is_some() {
        let r = uni_rem(&a, &b);
        a = b;
        b = uni_monic(&r);
    }
    uni_monic(&a)
}

fn uni_derivative(p: &[BigRational]) -> Vec<BigRational> {
    if p.len() <= 1 {
        return vec![];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(e, c)| c * BigRational::from_integer(BigInt::from(e)))
        .collect()
}

/// g / gcd(g, g'): the squarefree part (same roots, multiplicity one).
fn squarefree_part(p: &[BigRational]) -> Vec<BigRational> {
    let d = uni_derivative(p);
    if uni_deg(&d).is_none() {
        return uni_monic(p);
    }
    let g = uni_gcd(p, &d);
    if uni_deg(&g) == Some(0) {
        return uni_monic(p);
    }
    uni_monic(&uni_div_exact(p, &g))
}

/// Lower bound for the generic fibre cardinality of an equidimensional map
/// with finite generic fibre and some positive-dimensional special fibre:
/// the infimum of floor((d - r_p - 1) / (k_p - r_p)) over strata with
/// k_p > r_p. None when no positive-dimensional fibre exists.
pub fn fibre_count_bound(strata: &[Stratum], d: i64) -> Result<Option<u64>> {
    for s in strata {
        if s.h != d {
            return Err(Error::Precondition(format!(
                "source not pure-dimensional of dimension {} (component of dimension {})",
                d, s.h
            )));
        }
    }
    if strata.iter().any(|s| s.k == s.h && s.w != 0) {
        return Err(Error::Precondition(
            "generic fibre is not finite".into(),
        ));
    }
    let mut best: Option<u64> = None;
    for s in strata {
        if s.k > s.r {
            let q = ((d - s.r - 1) / (s.k - s.r)) as u64;
            best = Some(match best {
                None => q,
                Some(b) => b.min(q),
            });
        }
    }
    Ok(best)
}
