//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::coeff::{Coeff, CoeffRing};
use super::ring::{Monomial, PolyRing, Ring};
use crate::error::{Error, Result};

/// A polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same_as(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

/// One term of the JSON form of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    /// Decimal integer; residues are written as their value in `[0, p)`.
    pub coeff: String,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: i64) -> Poly {
        Poly::term(ring, ring.unit_monomial(), ring.coeff_ring().from_i64(c))
    }

    pub fn term(ring: &Ring, m: Monomial, c: Coeff) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Poly {
        Poly::term(ring, m, ring.coeff_ring().one())
    }

    pub fn var(ring: &Ring, var: usize) -> Poly {
        Poly::monomial(ring, ring.var_monomial(var))
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Poly> {
        Ok(Poly::var(ring, ring.require_index(name)?))
    }

    /// Builds a polynomial from terms, combining repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(ring: &Ring, terms: I) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeff_ring(&self) -> CoeffRing {
        self.ring.coeff_ring()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map(|(m, c)| m.is_one() && c.is_one()).unwrap_or(false)
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(|| self.coeff_ring().zero())
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        PolyRing::check_same(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        PolyRing::check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return Ok(other.mul_term(m, c));
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms.iter().next().unwrap();
            return Ok(self.mul_term(m, c));
        }
        let mut acc: FxHashMap<Monomial, Coeff> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len() / 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca.mul(cb);
                if c.is_zero() {
                    continue;
                }
                acc.entry(ma.mul(mb)).and_modify(|e| *e = e.add(&c)).or_insert(c);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(mm, cc)| {
                let prod = cc.mul(c);
                (!prod.is_zero()).then(|| (mm.mul(m), prod))
            })
            .collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        self.mul_term(&self.ring.unit_monomial(), c)
    }

    pub fn neg(&self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Largest weighted degree of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// True when all terms share one weighted degree (the zero polynomial qualifies).
    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(a), Some(b)) => a.degree() == b.degree(),
            _ => true,
        }
    }

    /// The degree of a homogeneous polynomial; errors for mixed degrees.
    /// The zero polynomial has no degree and yields `Ok(None)`.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        if self.is_homogeneous() {
            Ok(self.degree())
        } else {
            Err(Error::NotHomogeneous(self.to_string()))
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// Splits into weighted-homogeneous components.
    pub fn components(&self) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_insert_with(|| Poly::zero(&self.ring)).terms.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Formal partial derivative; coefficients are reduced in the ring, so
    /// `d(x^2)/dx = 0` over `F_2`.
    pub fn derivative(&self, var: usize) -> Result<Poly> {
        if var >= self.ring.nvars() {
            return Err(Error::UnknownVariable(format!("#{var}")));
        }
        let w = self.ring.weight(var);
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps: super::ring::Exponents = m.exponents().iter().copied().collect();
            exps[var] -= 1;
            let nc = c.scale(e as u64);
            if !nc.is_zero() {
                out.add_term(Monomial::from_parts(m.degree() - w, exps), &nc);
            }
        }
        Ok(out)
    }

    pub fn derivative_named(&self, name: &str) -> Result<Poly> {
        self.derivative(self.ring.require_index(name)?)
    }

    /// Exact division. `Ok(None)` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        PolyRing::check_same(&self.ring, &divisor.ring)?;
        let Some((dm, dc)) = divisor.leading_term() else {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.ring);
        while let Some((rm, rc)) = rem.leading_term() {
            let (Some(qm), Some(qc)) = (rm.div(dm), rc.div_exact(dc)) else {
                return Ok(None);
            };
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quot.add_term(qm, &qc);
        }
        Ok(Some(quot))
    }

    /// Indices of variables that occur with positive exponent.
    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0)).collect()
    }

    /// Reinterprets the polynomial in a ring with identical variables and a
    /// coefficient ring the coefficients coerce into (e.g. Z to F_p).
    pub fn change_coefficients(&self, target: &Ring) -> Result<Poly> {
        if self.ring.names() != target.names() || self.ring.weights() != target.weights() {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: target.to_string() });
        }
        let cr = target.coeff_ring();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &cr.coerce(c)?);
        }
        Ok(out)
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson { exponents: m.exponents().to_vec(), coeff: c.to_string() })
            .collect()
    }

    pub fn from_json_terms(ring: &Ring, terms: &[TermJson]) -> Result<Poly> {
        let cr = ring.coeff_ring();
        let mut out = Poly::zero(ring);
        for t in terms {
            if t.exponents.len() != ring.nvars() {
                return Err(Error::InvalidArgument(format!(
                    "term has {} exponents, ring has {} variables",
                    t.exponents.len(),
                    ring.nvars()
                )));
            }
            let v: BigInt = t
                .coeff
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient `{}`", t.coeff)))?;
            out.add_term(ring.monomial(&t.exponents), &cr.from_bigint(&v));
        }
        Ok(out)
    }

    /// Parses the canonical text form, e.g. `t1*t2 + 3*x^2 - 1`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Poly> {
        super::text::parse_poly(ring, text)
    }
}

impl fmt::Display for Poly {
    /// Terms in descending monomial order joined by ` + ` (or ` - ` for
    /// negative integer coefficients); `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (negative, mag) = match c {
                Coeff::Integer(v) if v.sign() == num_bigint::Sign::Minus => (true, Coeff::Integer(-v)),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{}*{}", mag, self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$try(rhs).expect("polynomial operands must share a ring")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$try(&rhs).expect("polynomial operands must share a ring")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// Sums an iterator of polynomials living in `ring`.
pub fn sum<'a, I: IntoIterator<Item = &'a Poly>>(ring: &Ring, items: I) -> Poly {
    let mut acc = Poly::zero(ring);
    for p in items {
        for (m, c) in p.terms() {
            acc.add_term(m.clone(), c);
        }
    }
    acc
}

/// Multiplies an iterator of polynomials living in `ring`.
pub fn product<'a, I: IntoIterator<Item = &'a Poly>>(ring: &Ring, items: I) -> Poly {
    let mut acc = Poly::one(ring);
    for p in items {
        acc = &acc * p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2(names: &[&str]) -> Ring {
        PolyRing::standard(names, CoeffRing::F2).unwrap()
    }

    #[test]
    fn freshmans_dream_in_char_two() {
        let r = f2(&["x", "y"]);
        let s = &Poly::var(&r, 0) + &Poly::var(&r, 1);
        assert_eq!((&s * &s).to_string(), "x^2 + y^2");
    }

    #[test]
    fn one_is_identity() {
        let r = f2(&["x", "y"]);
        let a = Poly::parse(&r, "x*y + y^3 + 1").unwrap();
        assert_eq!(&a * &Poly::one(&r), a);
    }

    #[test]
    fn eta_one_from_product() {
        let r = f2(&["x1", "A"]);
        let a = Poly::var(&r, 1);
        let ax = &a + &Poly::var(&r, 0);
        assert_eq!(&a * &ax, Poly::parse(&r, "A^2 + A*x1").unwrap());
    }

    #[test]
    fn ring_mismatch_names_both_rings() {
        let a = Poly::one(&f2(&["x"]));
        let b = Poly::one(&f2(&["y"]));
        let err = a.try_add(&b).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("F_2[x]") && msg.contains("F_2[y]"), "{msg}");
    }

    #[test]
    fn derivatives() {
        let r = f2(&["s1", "s2", "t1", "t2"]);
        let f = Poly::parse(&r, "s1*t2 + s2*t1").unwrap();
        assert_eq!(f.derivative_named("s1").unwrap(), Poly::parse(&r, "t2").unwrap());
        let x2 = Poly::parse(&r, "s1^2").unwrap();
        assert!(x2.derivative(0).unwrap().is_zero());
        assert!(f.derivative_named("q").is_err());
        let z = PolyRing::standard(&["x"], CoeffRing::Integers).unwrap();
        let g = Poly::parse(&z, "x^3").unwrap();
        assert_eq!(g.derivative(0).unwrap().to_string(), "3*x^2");
    }

    #[test]
    fn exact_division() {
        let z = PolyRing::standard(&["a", "b"], CoeffRing::Integers).unwrap();
        let p = Poly::parse(&z, "a - b").unwrap();
        let q = Poly::parse(&z, "a^2 + a*b + b^2").unwrap();
        let prod = &p * &q;
        assert_eq!(prod.div_exact(&p).unwrap(), Some(q.clone()));
        assert_eq!(Poly::parse(&z, "a^2 + 1").unwrap().div_exact(&p).unwrap(), None);
        let two = Poly::constant(&z, 2);
        assert_eq!(Poly::parse(&z, "a + 2").unwrap().div_exact(&two).unwrap(), None);
    }

    #[test]
    fn homogeneous_components_resum() {
        let r = PolyRing::new(&["a", "b"], &[1, 2], CoeffRing::F2).unwrap();
        let f = Poly::parse(&r, "a^3 + a*b + b + a + 1").unwrap();
        assert!(!f.is_homogeneous());
        let comps = f.components();
        assert_eq!(comps.len(), 4);
        assert_eq!(comps[&3], Poly::parse(&r, "a^3 + a*b").unwrap());
        assert_eq!(sum(&r, comps.values()), f);
        assert!(f.homogeneous_degree().is_err());
    }

    #[test]
    fn integer_printing_uses_signs() {
        let z = PolyRing::standard(&["x", "y"], CoeffRing::Integers).unwrap();
        let f = Poly::parse(&z, "-2*x^2 + x*y - 1").unwrap();
        assert_eq!(f.to_string(), "-2*x^2 + x*y - 1");
        let f3 = PolyRing::standard(&["x"], CoeffRing::Fp(3)).unwrap();
        assert_eq!(Poly::parse(&f3, "-x").unwrap().to_string(), "2*x");
    }

    #[test]
    fn json_terms_roundtrip() {
        let z = PolyRing::standard(&["x", "y"], CoeffRing::Integers).unwrap();
        let f = Poly::parse(&z, "-2*x^2 + 123456789012345678901234567890*x*y").unwrap();
        let j = f.to_json_terms();
        assert_eq!(j[0].exponents, vec![2, 0]);
        assert_eq!(Poly::from_json_terms(&z, &j).unwrap(), f);
    }
}
