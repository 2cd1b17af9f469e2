//! Polynomial rings with named, positively weighted variables.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use super::coeff::CoeffRing;
use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 12]>;

/// An exponent vector together with its cached weighted degree.
///
/// Monomials order first by weighted degree, then lexicographically by
/// exponent vector. This is a monomial order (compatible with products), so
/// leading terms of products are products of leading terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degree: u32,
    exps: Exponents,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub(crate) fn from_parts(degree: u32, exps: Exponents) -> Monomial {
        Monomial { degree, exps }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { degree: self.degree - other.degree, exps })
    }

    pub fn total_exponent(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// A polynomial ring over a prime field or the integers.
///
/// Variables carry positive integer weights; the weighted degree of a
/// monomial is `sum(exponent_i * weight_i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<u32>,
    coeffs: CoeffRing,
}

pub type Ring = Arc<PolyRing>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S], weights: &[u32], coeffs: CoeffRing) -> Result<Ring> {
        if names.len() != weights.len() {
            return Err(Error::InvalidArgument(format!(
                "{} variable names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::InvalidArgument(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidArgument(format!("duplicate variable name `{n}`")));
            }
        }
        if let Some(w) = weights.iter().find(|&&w| w == 0) {
            return Err(Error::InvalidArgument(format!("variable weight must be positive, got {w}")));
        }
        if let CoeffRing::Fp(p) = coeffs {
            CoeffRing::prime(p)?;
        }
        Ok(Arc::new(PolyRing { names, weights: weights.to_vec(), coeffs }))
    }

    /// All variables of weight one.
    pub fn standard<S: AsRef<str>>(names: &[S], coeffs: CoeffRing) -> Result<Ring> {
        PolyRing::new(names, &vec![1; names.len()], coeffs)
    }

    /// Variables `{prefix}{start}..={prefix}{end}` of weight one.
    pub fn indexed(prefix: &str, start: usize, end: usize, coeffs: CoeffRing) -> Result<Ring> {
        let names: Vec<String> = (start..=end).map(|i| format!("{prefix}{i}")).collect();
        PolyRing::standard(&names, coeffs)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, var: usize) -> u32 {
        self.weights[var]
    }

    pub fn coeff_ring(&self) -> CoeffRing {
        self.coeffs
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require_index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length");
        let degree = exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum();
        Monomial { degree, exps: exps.iter().copied().collect() }
    }

    pub fn unit_monomial(&self) -> Monomial {
        Monomial { degree: 0, exps: smallvec::smallvec![0; self.nvars()] }
    }

    pub fn var_monomial(&self, var: usize) -> Monomial {
        let mut exps: Exponents = smallvec::smallvec![0; self.nvars()];
        exps[var] = 1;
        Monomial { degree: self.weights[var], exps }
    }

    pub fn same_as(a: &Ring, b: &Ring) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub fn check_same(a: &Ring, b: &Ring) -> Result<()> {
        if PolyRing::same_as(a, b) {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: a.to_string(), right: b.to_string() })
        }
    }

    /// Formats a monomial as `x1^2*x2`, or `1` for the unit monomial.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.coeffs)?;
        for (i, (n, w)) in self.names.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *w == 1 {
                write!(f, "{n}")?;
            } else {
                write!(f, "{n}:{w}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_degree_and_order() {
        let r = PolyRing::new(&["c2", "c3", "eta2"], &[2, 3, 4], CoeffRing::F2).unwrap();
        let a = r.monomial(&[2, 0, 0]);
        let b = r.monomial(&[0, 0, 1]);
        let c = r.monomial(&[0, 1, 0]);
        assert_eq!(a.degree(), 4);
        assert_eq!(b.degree(), 4);
        assert!(c < b && b < a);
        assert_eq!(a.mul(&c).degree(), 7);
        assert_eq!(a.div(&r.monomial(&[1, 0, 0])).unwrap(), r.monomial(&[1, 0, 0]));
        assert!(b.div(&a).is_none());
    }

    #[test]
    fn rejects_bad_rings() {
        assert!(PolyRing::new(&["x", "x"], &[1, 1], CoeffRing::F2).is_err());
        assert!(PolyRing::new(&["x"], &[0], CoeffRing::F2).is_err());
        assert!(PolyRing::new(&["1x"], &[1], CoeffRing::F2).is_err());
        assert!(PolyRing::new(&["x"], &[1], CoeffRing::Fp(9)).is_err());
    }

    #[test]
    fn display_ring() {
        let r = PolyRing::new(&["s", "t"], &[1, 2], CoeffRing::F2).unwrap();
        assert_eq!(r.to_string(), "F_2[s,t:2]");
    }
}
