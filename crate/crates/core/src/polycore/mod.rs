//! Exact coefficient arithmetic, sparse multivariate polynomials, monomial
//! orders, parsing and printing.

mod coeff;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use coeff::{CoeffDomain, Coefficient};
pub use monomial::{InnerOrder, Monomial, MonomialOrder};
pub use parse::{parse_poly, parse_poly_factors};
pub use poly::{Poly, CANONICAL_ORDER};
pub use ring::{Ring, RingMap};

use crate::error::Result;

/// Arithmetic on two polynomials of the same ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    }
}
