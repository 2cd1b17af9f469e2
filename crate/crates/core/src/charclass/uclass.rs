//! Truncated total u-classes and the Whitney sum formula in characteristic 2.

use crate::error::{Error, Result};
use crate::exactalg::{Poly, PolyRing, Ring};

/// `u_0 = 1, u_1, ..., u_N` with `u_m` homogeneous of degree `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UClass {
    components: Vec<Poly>,
}

impl UClass {
    pub fn new(components: Vec<Poly>) -> Result<UClass> {
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidArgument("a u-class needs u_0".into()))?;
        if !first.is_one() {
            return Err(Error::InvalidArgument(format!("u_0 must be 1, got {first}")));
        }
        for (m, c) in components.iter().enumerate() {
            PolyRing::check_same(first.ring(), c.ring())?;
            match c.homogeneous_degree()? {
                Some(d) if d as usize != m => {
                    return Err(Error::InvalidArgument(format!("u_{m} has degree {d}")));
                }
                _ => {}
            }
        }
        Ok(UClass { components })
    }

    /// `u = 1` truncated at `n`.
    pub fn trivial(ring: &Ring, n: usize) -> UClass {
        let mut c = vec![Poly::zero(ring); n + 1];
        c[0] = Poly::one(ring);
        UClass { components: c }
    }

    pub fn ring(&self) -> &Ring {
        self.components[0].ring()
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, m: usize) -> &Poly {
        &self.components[m]
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// The class with all odd components set to zero.
    pub fn even_part(&self) -> UClass {
        let comps = self
            .components
            .iter()
            .enumerate()
            .map(|(m, c)| if m % 2 == 0 { c.clone() } else { Poly::zero(c.ring()) })
            .collect();
        UClass { components: comps }
    }
}

/// `u(E + F)`: `u_{2a} = sum_j u_{2j}(E) u_{2a-2j}(F)` and
/// `u_{2a+1} = sum_{l=0}^{2a+1} u_l(E) u_{2a+1-l}(F)`, truncated at the
/// smaller of the two orders.
pub fn whitney_sum(e: &UClass, f: &UClass) -> Result<UClass> {
    PolyRing::check_same(e.ring(), f.ring())?;
    let n = e.order().min(f.order());
    let ring = e.ring().clone();
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut acc = Poly::zero(&ring);
        for l in 0..=m {
            if m % 2 == 0 && l % 2 == 1 {
                continue;
            }
            let a = &e.components[l];
            let b = &f.components[m - l];
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(a * b);
            }
        }
        out.push(acc);
    }
    UClass::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::CoeffRing;

    fn ring() -> Ring {
        PolyRing::indexed("a", 1, 3, CoeffRing::F2).unwrap()
    }

    fn class(r: &Ring, comps: &[&str]) -> UClass {
        UClass::new(comps.iter().map(|s| Poly::parse(r, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn low_degree_formulas() {
        let r = ring();
        let e = class(&r, &["1", "a1", "a1^2", "a1*a2^2"]);
        let f = class(&r, &["1", "a3", "a2*a3", "a3^3"]);
        let s = whitney_sum(&e, &f).unwrap();
        assert_eq!(s.component(2), &(&Poly::parse(&r, "a1^2").unwrap() + &Poly::parse(&r, "a2*a3").unwrap()));
        let want = Poly::parse(&r, "a1*a2^2 + a1*a2*a3 + a1^2*a3 + a3^3").unwrap();
        assert_eq!(s.component(3), &want);
    }

    #[test]
    fn unit() {
        let r = ring();
        let e = class(&r, &["1", "a1", "a1^2 + a2^2", "a3^3"]);
        assert_eq!(whitney_sum(&e, &UClass::trivial(&r, 5)).unwrap(), e);
    }

    #[test]
    fn validation() {
        let r = ring();
        assert!(UClass::new(vec![Poly::zero(&r)]).is_err());
        assert!(UClass::new(vec![Poly::one(&r), Poly::parse(&r, "a1^2").unwrap()]).is_err());
    }
}
