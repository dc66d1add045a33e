//! Buchberger's algorithm with the coprime and chain criteria, producing the
//! unique reduced Gröbner basis.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::division::normal_form;
use crate::config::Budget;
use crate::error::Result;
use crate::polycore::{CoeffDomain, Monomial, MonomialOrder, Poly};

/// S-polynomial of f and g under the order.
pub fn s_polynomial(f: &Poly, g: &Poly, order: &MonomialOrder) -> Result<Poly> {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let domain = f.ring().domain();
    let f_scaled = f.mul_term(&fm.div_into(&lcm), &fc.inv(domain)?);
    let g_scaled = g.mul_term(&gm.div_into(&lcm), &gc.inv(domain)?);
    f_scaled.sub(&g_scaled)
}

fn canon(p: Poly) -> Poly {
    if p.ring().domain() == CoeffDomain::Rational {
        p.primitive_part()
    } else {
        p
    }
}

/// Reduced Gröbner basis of the given generators. Deterministic: pairs are
/// processed in increasing lcm degree, ties broken by index.
pub fn reduced_groebner_basis(
    gens: &[Poly],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Vec<Poly>> {
    let ring = match gens.first() {
        None => return Ok(Vec::new()),
        Some(g) => g.ring().clone(),
    };
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        ring.check_same(g.ring())?;
        if !g.is_zero() {
            basis.push(canon(g.clone()));
        }
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let lm = |p: &Poly| -> Monomial { p.leading_term(order).expect("nonzero").0.clone() };

    // Min-heap keyed by (lcm degree, i, j).
    let mut pairs: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |pairs: &mut BinaryHeap<Reverse<(u64, usize, usize)>>,
                         pending: &mut HashSet<(usize, usize)>,
                         basis: &[Poly],
                         i: usize,
                         j: usize| {
        let key = lm(&basis[i]).lcm(&lm(&basis[j])).degree();
        pairs.push(Reverse((key, i, j)));
        pending.insert((i, j));
    };

    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            push_pair(&mut pairs, &mut pending, &basis, i, j);
        }
    }

    while let Some(Reverse((_, i, j))) = pairs.pop() {
        pending.remove(&(i, j));
        let lmi = lm(&basis[i]);
        let lmj = lm(&basis[j]);
        // Buchberger's first criterion: coprime leading monomials.
        if lmi.is_coprime(&lmj) {
            continue;
        }
        // Chain criterion: some k divides the lcm and both side pairs are
        // already handled.
        let lcm_ij = lmi.lcm(&lmj);
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            if !lm(&basis[k]).divides(&lcm_ij) {
                return false;
            }
            let p1 = (i.min(k), i.max(k));
            let p2 = (j.min(k), j.max(k));
            !pending.contains(&p1) && !pending.contains(&p2)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = normal_form(&s, &basis, order, budget)?;
        if !r.is_zero() {
            let new_idx = basis.len();
            basis.push(canon(r));
            for k in 0..new_idx {
                push_pair(&mut pairs, &mut pending, &basis, k, new_idx);
            }
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another element's.
    let lms: Vec<Monomial> = basis.iter().map(|p| lm(p)).collect();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|j| {
            if i == j {
                return false;
            }
            if lms[j] == lms[i] {
                return j < i; // keep the first of duplicates
            }
            lms[j].divides(&lms[i])
        });
        if !redundant {
            keep.push(i);
        }
    }

    // Inter-reduce tails and normalize monic.
    let minimal: Vec<Poly> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = normal_form(&minimal[i], &others, order, budget)?;
        if !r.is_zero() {
            reduced.push(r.monic(order));
        }
    }

    // Canonical presentation: descending leading monomials.
    reduced.sort_by(|a, b| {
        let (ma, _) = a.leading_term(order).expect("nonzero");
        let (mb, _) = b.leading_term(order).expect("nonzero");
        order.cmp(mb, ma)
    });
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, Ring};

    #[test]
    fn linear_span() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let gens = vec![
            parse_poly("x + y", &ring).unwrap(),
            parse_poly("x - y", &ring).unwrap(),
        ];
        let gb = reduced_groebner_basis(&gens, &MonomialOrder::Lex, &budget).unwrap();
        assert_eq!(
            gb,
            vec![
                parse_poly("x", &ring).unwrap(),
                parse_poly("y", &ring).unwrap()
            ]
        );
    }

    #[test]
    fn circle_meets_diagonal() {
        // <x^2 + y^2 - 1, x - y> under lex x>y -> {x - y, y^2 - 1/2}
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let gens = vec![
            parse_poly("x^2 + y^2 - 1", &ring).unwrap(),
            parse_poly("x - y", &ring).unwrap(),
        ];
        let gb = reduced_groebner_basis(&gens, &MonomialOrder::Lex, &budget).unwrap();
        assert_eq!(
            gb,
            vec![
                parse_poly("x - y", &ring).unwrap(),
                parse_poly("y^2 - 1/2", &ring).unwrap(),
            ]
        );
    }

    #[test]
    fn deterministic_output() {
        let ring = Ring::rational(&["x", "y", "z"]);
        let budget = Budget::default();
        let gens = vec![
            parse_poly("x*y - z", &ring).unwrap(),
            parse_poly("y*z - x", &ring).unwrap(),
            parse_poly("x*z - y", &ring).unwrap(),
        ];
        let gb1 = reduced_groebner_basis(&gens, &MonomialOrder::GrevLex, &budget).unwrap();
        let gb2 = reduced_groebner_basis(&gens, &MonomialOrder::GrevLex, &budget).unwrap();
        assert_eq!(gb1, gb2);
    }

    #[test]
    fn all_s_polynomials_reduce_to_zero() {
        let ring = Ring::rational(&["x", "y", "z"]);
        let budget = Budget::default();
        let gens = vec![
            parse_poly("x^2 - y", &ring).unwrap(),
            parse_poly("x^3 - z", &ring).unwrap(),
        ];
        let gb = reduced_groebner_basis(&gens, &MonomialOrder::GrevLex, &budget).unwrap();
        for i in 0..gb.len() {
            for j in (i + 1)..gb.len() {
                let s = s_polynomial(&gb[i], &gb[j], &MonomialOrder::GrevLex).unwrap();
                let r = normal_form(&s, &gb, &MonomialOrder::GrevLex, &budget).unwrap();
                assert!(r.is_zero(), "S({},{}) did not reduce", i, j);
            }
        }
    }
}
