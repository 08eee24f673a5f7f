//! Coefficient fields: the rationals and prime fields of odd characteristic.

use std::fmt::Debug;
use std::hash::Hash;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgError, Result};

/// Serializable tag naming a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldDesc {
    #[serde(rename = "Q")]
    Q,
    Fp(u64),
}

impl std::fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldDesc::Q => write!(f, "Q"),
            FieldDesc::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

/// Exact field arithmetic. Elements are plain values; the field object carries the modulus.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn desc(&self) -> FieldDesc;
    /// Whether `a` is a square in the field.
    fn is_square(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The prime field F_p for an odd prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Rejects p = 2 and composite moduli. Moduli are kept below 2^31 so products fit in u64.
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(AlgError::UnsupportedField("characteristic 2 is excluded".into()));
        }
        if p < 3 || p >= 1 << 31 || !is_prime(p) {
            return Err(AlgError::UnsupportedField(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical residue of an arbitrary integer.
    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on signed integers
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(self.reduce(t0))
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(n)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let q = parse_rational(s)?;
        let num = self.reduce_big(q.numer());
        let den = self.reduce_big(q.denom());
        self.div(&num, &den)
            .ok_or_else(|| AlgError::Parse(format!("denominator of `{s}` vanishes mod {}", self.p)))
    }
    fn desc(&self) -> FieldDesc {
        FieldDesc::Fp(self.p)
    }
    fn is_square(&self, a: &u64) -> bool {
        *a == 0 || self.pow(a, (self.p - 1) / 2) == 1
    }
}

impl PrimeField {
    fn reduce_big(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((n % &p) + &p) % &p;
        r.to_string().parse().expect("residue fits in u64")
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }
    fn desc(&self) -> FieldDesc {
        FieldDesc::Q
    }
    fn is_square(&self, a: &BigRational) -> bool {
        let perfect = |n: &BigInt| {
            let r = n.sqrt();
            &r * &r == *n
        };
        !a.is_negative() && perfect(a.numer()) && perfect(a.denom())
    }
}

/// Parses "a" or "a/b" with optional sign into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || AlgError::Parse(format!("bad coefficient `{s}`"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    let mut q = BigRational::new(n, d);
    if q.denom().is_negative() {
        q = BigRational::new(-q.numer().clone(), -q.denom().clone());
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_two_and_composites() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn inverses_mod_p() {
        let f = PrimeField::new(11).unwrap();
        for a in 1..11 {
            let i = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &i), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn parse_fraction_mod_p() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("1/2").unwrap(), 3);
        assert_eq!(f.parse("-1").unwrap(), 4);
        assert!(f.parse("1/5").is_err());
    }

    #[test]
    fn squares() {
        let f = PrimeField::new(7).unwrap();
        let sq: Vec<u64> = (0..7).filter(|a| f.is_square(a)).collect();
        assert_eq!(sq, vec![0, 1, 2, 4]);
        let q = Rationals;
        assert!(q.is_square(&q.parse("9/4").unwrap()));
        assert!(!q.is_square(&q.parse("3").unwrap()));
        assert!(!q.is_square(&q.parse("-1").unwrap()));
    }

    #[test]
    fn rationals_normalized() {
        let q = Rationals;
        let a = q.parse("4/-6").unwrap();
        assert_eq!(q.format(&a), "-2/3");
    }
}
