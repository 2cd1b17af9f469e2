//! Stiefel-Whitney polynomial rings and Steenrod squares via Wu's formula.

use std::sync::Mutex;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::exactalg::{CoeffRing, Monomial, Poly, PolyRing, Ring};

/// `C(a, b) mod 2`. For `a >= 0` this is Lucas' theorem (`b` is a bitwise
/// submask of `a`); `C(-1, b) = (-1)^b` is odd.
pub fn binomial_mod2(a: i64, b: i64) -> bool {
    if b < 0 {
        false
    } else if a < 0 {
        a == -1
    } else {
        b <= a && (a & b) == b
    }
}

/// `F_2[w_1, ..., w_n]` with `|w_i| = i`, or `F_2[w_2, ..., w_n]` when `w_1 = 0`.
pub struct SWRing {
    n: u32,
    oriented: bool,
    ring: Ring,
    cache: Mutex<FxHashMap<(u32, Monomial), Poly>>,
}

impl std::fmt::Debug for SWRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SWRing").field("n", &self.n).field("oriented", &self.oriented).finish()
    }
}

impl SWRing {
    pub fn new(n: u32, oriented: bool) -> Result<SWRing> {
        let first = if oriented { 2 } else { 1 };
        if n < first {
            return Err(Error::InvalidArgument(format!("SWRing needs n >= {first}")));
        }
        let names: Vec<String> = (first..=n).map(|i| format!("w{i}")).collect();
        let weights: Vec<u32> = (first..=n).collect();
        let ring = PolyRing::new(&names, &weights, CoeffRing::F2)?;
        Ok(SWRing { n, oriented, ring, cache: Mutex::new(FxHashMap::default()) })
    }

    /// `H*(BO(n))`.
    pub fn bo(n: u32) -> Result<SWRing> {
        SWRing::new(n, false)
    }

    /// `H*(BSO(n))`: `w_1 = 0`.
    pub fn bso(n: u32) -> Result<SWRing> {
        SWRing::new(n, true)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn first(&self) -> u32 {
        if self.oriented {
            2
        } else {
            1
        }
    }

    /// `w_j`, with `w_0 = 1` and `w_j = 0` outside the ring.
    pub fn w(&self, j: u32) -> Poly {
        if j == 0 {
            Poly::one(&self.ring)
        } else if j < self.first() || j > self.n {
            Poly::zero(&self.ring)
        } else {
            Poly::var(&self.ring, (j - self.first()) as usize)
        }
    }

    /// `Sq^i w_j = sum_{l=0}^{i} C(j - l - 1, i - l) w_l w_{i+j-l}`.
    pub fn sq_w(&self, i: u32, j: u32) -> Poly {
        if i > j {
            return Poly::zero(&self.ring);
        }
        let mut out = Poly::zero(&self.ring);
        for l in 0..=i {
            if binomial_mod2(j as i64 - l as i64 - 1, (i - l) as i64) {
                let a = self.w(l);
                let b = self.w(i + j - l);
                if !a.is_zero() && !b.is_zero() {
                    out = &out + &(&a * &b);
                }
            }
        }
        out
    }

    fn sq_monomial(&self, i: u32, m: &Monomial) -> Poly {
        if i == 0 {
            return Poly::monomial(&self.ring, m.clone());
        }
        if i > m.degree() {
            return Poly::zero(&self.ring);
        }
        let key = (i, m.clone());
        if let Some(p) = self.cache.lock().unwrap().get(&key) {
            return p.clone();
        }
        let v = m.exponents().iter().position(|&e| e > 0).expect("nonconstant monomial");
        let mut rest = m.exponents().to_vec();
        rest[v] -= 1;
        let rest = self.ring.monomial(&rest);
        let j = v as u32 + self.first();
        let mut out = Poly::zero(&self.ring);
        for a in 0..=i.min(j) {
            let left = self.sq_w(a, j);
            if left.is_zero() {
                continue;
            }
            let right = self.sq_monomial(i - a, &rest);
            if !right.is_zero() {
                out = &out + &(&left * &right);
            }
        }
        self.cache.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `Sq^i f` for homogeneous `f`, by the Cartan formula on monomials.
    pub fn sq(&self, i: u32, f: &Poly) -> Result<Poly> {
        PolyRing::check_same(f.ring(), &self.ring)?;
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(f.to_string()));
        }
        let mut out = Poly::zero(&self.ring);
        for (m, _) in f.terms() {
            let s = self.sq_monomial(i, m);
            for (m2, c2) in s.terms() {
                out.add_term(m2.clone(), c2);
            }
        }
        Ok(out)
    }

    /// The total square `Sq f = sum_i Sq^i f`.
    pub fn total_sq(&self, f: &Poly) -> Result<Poly> {
        let d = f.homogeneous_degree()?.unwrap_or(0);
        let mut out = Poly::zero(&self.ring);
        for i in 0..=d {
            out = &out + &self.sq(i, f)?;
        }
        Ok(out)
    }
}

/// `Sq^i f` in the given Stiefel-Whitney ring.
pub fn sq(ring: &SWRing, i: u32, f: &Poly) -> Result<Poly> {
    ring.sq(i, f)
}
