//! Multivariate division (normal form against a list of divisors).

use crate::config::Budget;
use crate::error::Result;
use crate::polycore::{Monomial, MonomialOrder, Poly};

/// Remainder of `p` on division by `basis` under `order`: no term of the
/// result is divisible by any basis leading term, and `p - r` lies in the
/// ideal generated by the basis. Deterministic given the input order of the
/// basis (the first divisor whose leading term divides is used).
pub fn normal_form(
    p: &Poly,
    basis: &[Poly],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Poly> {
    if !basis.is_empty() {
        basis[0].ring().check_same(p.ring())?;
    }
    let divisors: Vec<(&Poly, Monomial)> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let (lm, _) = b.leading_term(order).expect("nonzero");
            (b, lm.clone())
        })
        .collect();

    let ring = p.ring().clone();
    let domain = ring.domain();
    let mut work = p.clone();
    let mut remainder: Vec<(Monomial, crate::polycore::Coefficient)> = Vec::new();

    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term(order).expect("nonzero");
            (m.clone(), c.clone())
        };
        let mut reduced = false;
        for (b, blm) in &divisors {
            if blm.divides(&lm) {
                budget.charge(1)?;
                let quot_m = blm.div_into(&lm);
                let (_, blc) = b.leading_term(order).expect("nonzero");
                let quot_c = lc.div(blc, domain)?;
                work = work.sub(&b.mul_term(&quot_m, &quot_c))?;
                reduced = true;
                break;
            }
        }
        if !reduced {
            // Move the leading term to the remainder and keep going.
            remainder.push((lm.clone(), lc.clone()));
            let single = Poly::from_terms(&ring, vec![(lm, lc)]);
            work = work.sub(&single)?;
        }
    }
    Ok(Poly::from_terms(&ring, remainder))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, Ring};

    #[test]
    fn membership_remainder_zero() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let p = parse_poly("x^2", &ring).unwrap();
        let basis = vec![parse_poly("x", &ring).unwrap()];
        let r = normal_form(&p, &basis, &MonomialOrder::Lex, &budget).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn remainder_survives() {
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let p = parse_poly("x^2 + y", &ring).unwrap();
        let basis = vec![parse_poly("x", &ring).unwrap()];
        let r = normal_form(&p, &basis, &MonomialOrder::Lex, &budget).unwrap();
        assert_eq!(r, parse_poly("y", &ring).unwrap());
    }

    #[test]
    fn one_division_step() {
        // normal_form(x*y + 1, {x - y}, lex x>y) -> y^2 + 1
        let ring = Ring::rational(&["x", "y"]);
        let budget = Budget::default();
        let p = parse_poly("x*y + 1", &ring).unwrap();
        let basis = vec![parse_poly("x - y", &ring).unwrap()];
        let r = normal_form(&p, &basis, &MonomialOrder::Lex, &budget).unwrap();
        assert_eq!(r, parse_poly("y^2 + 1", &ring).unwrap());
    }
}
