//! Monomial bases of graded components.

use rustc_hash::FxHashMap;

use super::ring::{Monomial, Ring};

/// Default cap on the size of a degree component handled by dense linear algebra.
pub const DEFAULT_MONOMIAL_GUARD: usize = 200_000;

/// Monomials of weighted degree `d`, in descending monomial order.
///
/// When `eliminated` is given, that variable is left out (its exponent is
/// always zero): this is the basis of the quotient by a linear relation that
/// expresses the eliminated variable through the others.
pub fn graded_component_basis(ring: &Ring, d: u32, eliminated: Option<usize>) -> Vec<Monomial> {
    graded_component_basis_bounded(ring, d, eliminated, &[])
}

/// As [`graded_component_basis`], with per-variable exponent caps (`caps[v]`,
/// missing entries meaning unbounded). A cap of 1 models an exterior generator.
pub fn graded_component_basis_bounded(
    ring: &Ring,
    d: u32,
    eliminated: Option<usize>,
    caps: &[Option<u32>],
) -> Vec<Monomial> {
    let n = ring.nvars();
    let weights = ring.weights();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn go(
        v: usize,
        left: u32,
        weights: &[u32],
        eliminated: Option<usize>,
        caps: &[Option<u32>],
        exps: &mut Vec<u32>,
        ring: &Ring,
        out: &mut Vec<Monomial>,
    ) {
        if v == weights.len() {
            if left == 0 {
                out.push(ring.monomial(exps));
            }
            return;
        }
        if Some(v) == eliminated {
            exps[v] = 0;
            go(v + 1, left, weights, eliminated, caps, exps, ring, out);
            return;
        }
        let mut max = left / weights[v];
        if let Some(Some(c)) = caps.get(v) {
            max = max.min(*c);
        }
        for e in (0..=max).rev() {
            exps[v] = e;
            go(v + 1, left - e * weights[v], weights, eliminated, caps, exps, ring, out);
        }
        exps[v] = 0;
    }
    go(0, d, weights, eliminated, caps, &mut exps, ring, &mut out);
    out
}

/// Number of monomials of degree `d` in variables of the given weights.
pub fn count_monomials(weights: &[u32], d: u32) -> u128 {
    let mut ways = vec![0u128; d as usize + 1];
    ways[0] = 1;
    for &w in weights {
        for k in w as usize..=d as usize {
            ways[k] += ways[k - w as usize];
        }
    }
    ways[d as usize]
}

/// Lookup table from monomial to its column index in a basis.
pub fn index_basis(basis: &[Monomial]) -> FxHashMap<Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{CoeffRing, PolyRing};

    #[test]
    fn degree_two_in_two_vars() {
        let r = PolyRing::indexed("x", 1, 2, CoeffRing::F2).unwrap();
        let b: Vec<String> = graded_component_basis(&r, 2, None).iter().map(|m| r.format_monomial(m)).collect();
        assert_eq!(b, ["x1^2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn linear_relation_eliminates_a_variable() {
        let r = PolyRing::indexed("x", 1, 3, CoeffRing::F2).unwrap();
        let b = graded_component_basis(&r, 2, Some(2));
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|m| m.exponent(2) == 0));
    }

    #[test]
    fn weighted_component() {
        let r = PolyRing::new(&["c2", "c3", "eta2"], &[2, 3, 4], CoeffRing::F2).unwrap();
        let b: Vec<String> = graded_component_basis(&r, 4, None).iter().map(|m| r.format_monomial(m)).collect();
        assert_eq!(b, ["c2^2", "eta2"]);
        assert_eq!(count_monomials(&[2, 3, 4], 4), 2);
        assert_eq!(graded_component_basis(&r, 0, None).len(), 1);
        assert!(graded_component_basis(&r, 1, None).is_empty());
    }

    #[test]
    fn count_agrees_with_enumeration() {
        let r = PolyRing::new(&["a", "b", "c", "d"], &[1, 2, 3, 5], CoeffRing::F2).unwrap();
        for d in 0..20 {
            assert_eq!(graded_component_basis(&r, d, None).len() as u128, count_monomials(r.weights(), d));
        }
    }

    #[test]
    fn exterior_caps() {
        let r = PolyRing::new(&["v", "c"], &[1, 2], CoeffRing::F2).unwrap();
        for d in 0..8 {
            assert_eq!(graded_component_basis_bounded(&r, d, None, &[Some(1), None]).len(), 1);
        }
    }
}
