//! Gröbner-basis engine and the ideal-theoretic toolkit: normal forms,
//! reduced bases, elimination, saturation, intersection, membership.

mod buchberger;
mod division;
mod ideal;
mod ops;

pub use buchberger::{reduced_groebner_basis, s_polynomial};
pub use division::normal_form;
pub use ideal::Ideal;
pub use ops::{eliminate, intersect, lift, radical_member, saturate, saturate_by_ideal};

use crate::config::Budget;
use crate::error::Result;
use crate::polycore::{MonomialOrder, Poly};

/// Membership of p in I under the given working order.
pub fn member(p: &Poly, ideal: &Ideal, order: &MonomialOrder, budget: &Budget) -> Result<bool> {
    ideal.ring().check_same(p.ring())?;
    let gb = ideal.groebner_basis(order, budget)?;
    Ok(normal_form(p, &gb, order, budget)?.is_zero())
}
