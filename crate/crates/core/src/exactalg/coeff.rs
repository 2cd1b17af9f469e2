//! Exact coefficients: residues modulo a small prime, or arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient domain of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoeffRing {
    /// The prime field with `p` elements.
    Fp(u64),
    /// The integers.
    Integers,
}

impl CoeffRing {
    pub const F2: CoeffRing = CoeffRing::Fp(2);

    pub fn prime(p: u64) -> Result<CoeffRing> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not a supported prime")));
        }
        Ok(CoeffRing::Fp(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffRing::Fp(p) => *p,
            CoeffRing::Integers => 0,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match *self {
            CoeffRing::Fp(p) => Coeff::Residue { value: v.rem_euclid(p as i64) as u64, modulus: p },
            CoeffRing::Integers => Coeff::Integer(BigInt::from(v)),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match *self {
            CoeffRing::Fp(p) => {
                let pb = BigInt::from(p);
                let r = ((v % &pb) + &pb) % &pb;
                Coeff::Residue { value: r.to_u64().unwrap_or(0), modulus: p }
            }
            CoeffRing::Integers => Coeff::Integer(v.clone()),
        }
    }

    /// Maps a coefficient of any ring into this one (reduction mod p when needed).
    pub fn coerce(&self, c: &Coeff) -> Result<Coeff> {
        match (self, c) {
            (CoeffRing::Fp(p), Coeff::Residue { modulus, .. }) if p == modulus => Ok(c.clone()),
            (CoeffRing::Integers, Coeff::Integer(_)) => Ok(c.clone()),
            (_, Coeff::Integer(v)) => Ok(self.from_bigint(v)),
            (_, Coeff::Residue { modulus, .. }) => Err(Error::RingMismatch {
                left: self.to_string(),
                right: CoeffRing::Fp(*modulus).to_string(),
            }),
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Fp(p) => write!(f, "F_{p}"),
            CoeffRing::Integers => write!(f, "Z"),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A single coefficient.
///
/// Residues always satisfy `value < modulus`. Mixing residues of different
/// moduli, or residues with integers, panics: the polynomial layer checks
/// ring compatibility before any arithmetic reaches this point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Residue { value: u64, modulus: u64 },
    Integer(BigInt),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Residue { value, .. } => *value == 0,
            Coeff::Integer(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Residue { value, .. } => *value == 1,
            Coeff::Integer(v) => v.is_one(),
        }
    }

    pub fn ring(&self) -> CoeffRing {
        match self {
            Coeff::Residue { modulus, .. } => CoeffRing::Fp(*modulus),
            Coeff::Integer(_) => CoeffRing::Integers,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Residue { value: a, modulus: p }, Coeff::Residue { value: b, modulus: q }) => {
                assert_eq!(p, q, "residue moduli differ");
                Coeff::Residue { value: (a + b) % p, modulus: *p }
            }
            (Coeff::Integer(a), Coeff::Integer(b)) => Coeff::Integer(a + b),
            _ => panic!("cannot add a residue and an integer"),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Residue { value: a, modulus: p }, Coeff::Residue { value: b, modulus: q }) => {
                assert_eq!(p, q, "residue moduli differ");
                let v = (*a as u128 * *b as u128) % *p as u128;
                Coeff::Residue { value: v as u64, modulus: *p }
            }
            (Coeff::Integer(a), Coeff::Integer(b)) => Coeff::Integer(a * b),
            _ => panic!("cannot multiply a residue and an integer"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Residue { value, modulus } => {
                Coeff::Residue { value: (modulus - value) % modulus, modulus: *modulus }
            }
            Coeff::Integer(a) => Coeff::Integer(-a),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    /// Multiplies by a machine integer (used for derivatives `e * x^(e-1)`).
    pub fn scale(&self, k: u64) -> Coeff {
        match self {
            Coeff::Residue { value, modulus } => Coeff::Residue {
                value: ((*value as u128 * (k % modulus) as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            Coeff::Integer(a) => Coeff::Integer(a * BigInt::from(k)),
        }
    }

    /// Multiplicative inverse of a nonzero residue; `None` for zero residues and
    /// for integers other than ±1.
    pub fn inverse(&self) -> Option<Coeff> {
        match self {
            Coeff::Residue { value, modulus } => {
                if *value == 0 {
                    return None;
                }
                Some(Coeff::Residue { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus })
            }
            Coeff::Integer(a) => {
                if a.abs().is_one() {
                    Some(self.clone())
                } else {
                    None
                }
            }
        }
    }

    /// Exact quotient `self / other`; `None` if it does not exist in the coefficient ring.
    pub fn div_exact(&self, other: &Coeff) -> Option<Coeff> {
        match (self, other) {
            (Coeff::Residue { .. }, Coeff::Residue { .. }) => other.inverse().map(|inv| self.mul(&inv)),
            (Coeff::Integer(a), Coeff::Integer(b)) => {
                if b.is_zero() {
                    return None;
                }
                let (q, r) = num_integer::Integer::div_rem(a, b);
                r.is_zero().then_some(Coeff::Integer(q))
            }
            _ => None,
        }
    }

    /// Signed representative: integers as is, residues in `(-p/2, p/2]`.
    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Residue { value, modulus } => {
                if *value > modulus / 2 {
                    BigInt::from(*value) - BigInt::from(*modulus)
                } else {
                    BigInt::from(*value)
                }
            }
            Coeff::Integer(a) => a.clone(),
        }
    }

    /// The residue value, for residues only.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Coeff::Residue { value, .. } => Some(*value),
            Coeff::Integer(_) => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Residue { value, .. } => write!(f, "{value}"),
            Coeff::Integer(a) => write!(f, "{a}"),
        }
    }
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_arithmetic_wraps() {
        let f5 = CoeffRing::prime(5).unwrap();
        let a = f5.from_i64(3);
        let b = f5.from_i64(4);
        assert_eq!(a.add(&b), f5.from_i64(2));
        assert_eq!(a.mul(&b), f5.from_i64(2));
        assert_eq!(a.neg(), f5.from_i64(2));
        assert_eq!(a.inverse().unwrap().mul(&a), f5.one());
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
    }

    #[test]
    fn integers_do_not_overflow() {
        let z = CoeffRing::Integers;
        let mut acc = z.one();
        let big = z.from_i64(i64::MAX);
        for _ in 0..4 {
            acc = acc.mul(&big);
        }
        assert!(acc.to_bigint() > BigInt::from(i64::MAX));
        assert_eq!(z.from_i64(6).div_exact(&z.from_i64(4)), None);
        assert_eq!(z.from_i64(-6).div_exact(&z.from_i64(3)), Some(z.from_i64(-2)));
    }

    #[test]
    fn non_primes_rejected() {
        assert!(CoeffRing::prime(4).is_err());
        assert!(CoeffRing::prime(1).is_err());
        assert!(CoeffRing::prime(7).is_ok());
    }

    #[test]
    fn coerce_reduces_integers() {
        let f3 = CoeffRing::prime(3).unwrap();
        let c = f3.coerce(&CoeffRing::Integers.from_i64(-4)).unwrap();
        assert_eq!(c, f3.from_i64(2));
        assert!(CoeffRing::Integers.coerce(&c).is_err());
    }
}
