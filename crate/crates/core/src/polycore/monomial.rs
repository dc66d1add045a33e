//! Exponent vectors and monomial orders.

use crate::error::{Error, Result};
use std::cmp::Ordering;

/// Exponent vector indexed by the ring's ordered variable list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Total degree restricted to a set of variable indices.
    pub fn degree_in(&self, vars: &[usize]) -> u64 {
        vars.iter().map(|&v| self.0[v] as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Inner order used inside blocks of a block-elimination order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InnerOrder {
    Lex,
    GrevLex,
}

/// Monomial orders: lex, grevlex, and block elimination (front block compared
/// first, so any monomial containing a front-block variable exceeds any
/// monomial free of them when the front comparison is by total degree first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block {
        front: Vec<usize>,
        front_order: InnerOrder,
        back_order: InnerOrder,
    },
}

impl MonomialOrder {
    /// Standard elimination order for a variable block: grevlex within both
    /// blocks, front block dominant.
    pub fn elimination(front: Vec<usize>) -> Self {
        MonomialOrder::Block {
            front,
            front_order: InnerOrder::GrevLex,
            back_order: InnerOrder::GrevLex,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => cmp_lex(&a.0, &b.0),
            MonomialOrder::GrevLex => cmp_grevlex(&a.0, &b.0),
            MonomialOrder::Block {
                front,
                front_order,
                back_order,
            } => {
                let in_front = |i: usize| front.contains(&i);
                let fa: Vec<u32> = (0..a.len()).filter(|&i| in_front(i)).map(|i| a.0[i]).collect();
                let fb: Vec<u32> = (0..b.len()).filter(|&i| in_front(i)).map(|i| b.0[i]).collect();
                let first = match front_order {
                    InnerOrder::Lex => cmp_lex(&fa, &fb),
                    InnerOrder::GrevLex => cmp_grevlex(&fa, &fb),
                };
                if first != Ordering::Equal {
                    return first;
                }
                let ba: Vec<u32> = (0..a.len()).filter(|&i| !in_front(i)).map(|i| a.0[i]).collect();
                let bb: Vec<u32> = (0..b.len()).filter(|&i| !in_front(i)).map(|i| b.0[i]).collect();
                match back_order {
                    InnerOrder::Lex => cmp_lex(&ba, &bb),
                    InnerOrder::GrevLex => cmp_grevlex(&ba, &bb),
                }
            }
        }
    }

    /// Spec-level comparison with a length check.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch);
        }
        Ok(self.cmp(a, b))
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Same degree: the last variable where they differ decides, reversed.
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn lex_x_beats_y_power() {
        // vars (x, y): x^1 vs y^5
        let ord = MonomialOrder::Lex;
        assert_eq!(
            ord.compare(&m(&[1, 0]), &m(&[0, 5])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_same_degree_tiebreak() {
        // vars (x, y): x*y vs x^2 -> less
        let ord = MonomialOrder::GrevLex;
        assert_eq!(
            ord.compare(&m(&[1, 1]), &m(&[2, 0])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn elimination_front_dominates() {
        // vars (y, x), front {y}: y vs x^9 -> greater
        let ord = MonomialOrder::elimination(vec![0]);
        assert_eq!(
            ord.compare(&m(&[1, 0]), &m(&[0, 9])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn length_mismatch_rejected() {
        let ord = MonomialOrder::Lex;
        assert!(ord.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }
}
