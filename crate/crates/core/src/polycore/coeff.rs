//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient domain of a ring: the rationals, or F_q for a prime q < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    Rational,
    PrimeField(u64),
}

/// A coefficient value. Rationals are kept in lowest terms with positive
/// denominator (the `num-rational` canonical form); prime-field values are
/// reduced to [0, q).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rat(BigRational),
    Mod(u64),
}

impl Coefficient {
    pub fn zero(domain: CoeffDomain) -> Self {
        match domain {
            CoeffDomain::Rational => Coefficient::Rat(BigRational::zero()),
            CoeffDomain::PrimeField(_) => Coefficient::Mod(0),
        }
    }

    pub fn one(domain: CoeffDomain) -> Self {
        match domain {
            CoeffDomain::Rational => Coefficient::Rat(BigRational::one()),
            CoeffDomain::PrimeField(_) => Coefficient::Mod(1),
        }
    }

    pub fn from_int(n: i64, domain: CoeffDomain) -> Self {
        match domain {
            CoeffDomain::Rational => Coefficient::Rat(BigRational::from_integer(BigInt::from(n))),
            CoeffDomain::PrimeField(q) => {
                let r = n.rem_euclid(q as i64) as u64;
                Coefficient::Mod(r)
            }
        }
    }

    pub fn from_bigint(n: BigInt, domain: CoeffDomain) -> Self {
        match domain {
            CoeffDomain::Rational => Coefficient::Rat(BigRational::from_integer(n)),
            CoeffDomain::PrimeField(q) => {
                let q_big = BigInt::from(q);
                let mut r = &n % &q_big;
                if r.is_negative() {
                    r += &q_big;
                }
                let (_, digits) = r.to_u64_digits();
                Coefficient::Mod(digits.first().copied().unwrap_or(0))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rat(r) => r.is_zero(),
            Coefficient::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rat(r) => r.is_one(),
            Coefficient::Mod(v) => *v == 1,
        }
    }

    pub fn add(&self, other: &Self, domain: CoeffDomain) -> Self {
        match (self, other, domain) {
            (Coefficient::Rat(a), Coefficient::Rat(b), CoeffDomain::Rational) => {
                Coefficient::Rat(a + b)
            }
            (Coefficient::Mod(a), Coefficient::Mod(b), CoeffDomain::PrimeField(q)) => {
                Coefficient::Mod((a + b) % q)
            }
            _ => panic!("coefficient domain mismatch"),
        }
    }

    pub fn sub(&self, other: &Self, domain: CoeffDomain) -> Self {
        match (self, other, domain) {
            (Coefficient::Rat(a), Coefficient::Rat(b), CoeffDomain::Rational) => {
                Coefficient::Rat(a - b)
            }
            (Coefficient::Mod(a), Coefficient::Mod(b), CoeffDomain::PrimeField(q)) => {
                Coefficient::Mod((a + q - b) % q)
            }
            _ => panic!("coefficient domain mismatch"),
        }
    }

    pub fn mul(&self, other: &Self, domain: CoeffDomain) -> Self {
        match (self, other, domain) {
            (Coefficient::Rat(a), Coefficient::Rat(b), CoeffDomain::Rational) => {
                Coefficient::Rat(a * b)
            }
            (Coefficient::Mod(a), Coefficient::Mod(b), CoeffDomain::PrimeField(q)) => {
                Coefficient::Mod(a.wrapping_mul(*b) % q)
            }
            _ => panic!("coefficient domain mismatch"),
        }
    }

    pub fn neg(&self, domain: CoeffDomain) -> Self {
        match (self, domain) {
            (Coefficient::Rat(a), CoeffDomain::Rational) => Coefficient::Rat(-a),
            (Coefficient::Mod(a), CoeffDomain::PrimeField(q)) => {
                Coefficient::Mod(if *a == 0 { 0 } else { q - a })
            }
            _ => panic!("coefficient domain mismatch"),
        }
    }

    pub fn inv(&self, domain: CoeffDomain) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, domain) {
            (Coefficient::Rat(a), CoeffDomain::Rational) => Ok(Coefficient::Rat(a.recip())),
            (Coefficient::Mod(a), CoeffDomain::PrimeField(q)) => Ok(Coefficient::Mod(mod_inv(*a, q))),
            _ => panic!("coefficient domain mismatch"),
        }
    }

    pub fn div(&self, other: &Self, domain: CoeffDomain) -> Result<Self> {
        Ok(self.mul(&other.inv(domain)?, domain))
    }

    /// Reduce a rational coefficient mod q. Fails when the denominator is
    /// divisible by q.
    pub fn reduce_mod(&self, q: u64) -> Result<Coefficient> {
        match self {
            Coefficient::Rat(r) => {
                let num = Coefficient::from_bigint(r.numer().clone(), CoeffDomain::PrimeField(q));
                let den = Coefficient::from_bigint(r.denom().clone(), CoeffDomain::PrimeField(q));
                if den.is_zero() {
                    return Err(Error::DenominatorNotInvertible(q));
                }
                den.inv(CoeffDomain::PrimeField(q))
                    .map(|d| num.mul(&d, CoeffDomain::PrimeField(q)))
            }
            Coefficient::Mod(_) => Ok(self.clone()),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coefficient::Rat(r) => Some(r),
            Coefficient::Mod(_) => None,
        }
    }
}

/// Modular inverse by extended Euclid; q is prime and 0 < a < q.
fn mod_inv(a: u64, q: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (q as i128, a as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a non-unit");
    t.rem_euclid(q as i128) as u64
}

/// Pretty-print for report output: integers plainly, fractions as num/den.
impl std::fmt::Display for Coefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coefficient::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Mod(v) => write!(f, "{}", v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let d = CoeffDomain::Rational;
        let a = Coefficient::from_int(4, d);
        let b = Coefficient::from_int(6, d);
        let q = a.div(&b, d).unwrap();
        match q {
            Coefficient::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(2));
                assert_eq!(r.denom(), &BigInt::from(3));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn prime_field_reduced() {
        let d = CoeffDomain::PrimeField(7);
        let a = Coefficient::from_int(-3, d);
        assert_eq!(a, Coefficient::Mod(4));
        let inv = a.inv(d).unwrap();
        assert!(a.mul(&inv, d).is_one());
    }

    #[test]
    fn reduce_mod_rejects_bad_denominator() {
        let half = Coefficient::Rat(BigRational::new(BigInt::from(1), BigInt::from(5)));
        assert!(half.reduce_mod(5).is_err());
        assert_eq!(half.reduce_mod(3).unwrap(), Coefficient::Mod(2));
    }
}
