//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Exponent vector with cached total degree and a support bitmask for quick divisibility rejection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 24]>,
    deg: u32,
    mask: u64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), deg: 0, mask: 0 }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let mut m = Monomial { exps: SmallVec::from_slice(exps), deg: 0, mask: 0 };
        m.refresh();
        m
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m.refresh();
        m
    }

    fn refresh(&mut self) {
        self.deg = self.exps.iter().map(|&e| e as u32).sum();
        self.mask = 0;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                self.mask |= 1u64 << (i % 64);
            }
        }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 24]> =
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg, mask: self.mask | other.mask }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial {
            exps: other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect(),
            deg: 0,
            mask: 0,
        };
        m.refresh();
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect(),
            deg: 0,
            mask: 0,
        };
        m.refresh();
        m
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
            || self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponents permuted: entry `j` of the result is entry `perm[j]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let exps: Vec<u16> = perm.iter().map(|&j| self.exps[j]).collect();
        Monomial::from_exps(&exps)
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }
}

/// Monomial orders. `Block { elim }` compares the first `elim` variables by grevlex first,
/// then the remaining ones by grevlex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block { elim: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a.exps(), b.exps(), a.deg, b.deg),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Block { elim } => {
                let (a1, a2) = a.exps().split_at(elim);
                let (b1, b2) = b.exps().split_at(elim);
                let da1: u32 = a1.iter().map(|&e| e as u32).sum();
                let db1: u32 = b1.iter().map(|&e| e as u32).sum();
                grevlex(a1, b1, da1, db1)
                    .then_with(|| grevlex(a2, b2, a.deg - da1, b.deg - db1))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block { elim } => format!("block({elim})"),
        }
    }
}

fn grevlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        let y2 = Monomial::from_exps(&[0, 2, 0]);
        let xz = Monomial::from_exps(&[1, 0, 1]);
        assert_eq!(o.cmp(&y2, &xz), Ordering::Greater);
        let x = Monomial::from_exps(&[1, 0, 0]);
        let y = Monomial::from_exps(&[0, 1, 0]);
        assert_eq!(o.cmp(&x, &y), Ordering::Greater);
    }

    #[test]
    fn block_eliminates_prefix() {
        let o = MonomialOrder::Block { elim: 1 };
        let t = Monomial::from_exps(&[1, 0]);
        let y5 = Monomial::from_exps(&[0, 5]);
        assert_eq!(o.cmp(&t, &y5), Ordering::Greater);
    }

    #[test]
    fn divisibility() {
        let a = Monomial::from_exps(&[1, 0, 2]);
        let b = Monomial::from_exps(&[2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial::from_exps(&[1, 1, 0]));
    }
}
