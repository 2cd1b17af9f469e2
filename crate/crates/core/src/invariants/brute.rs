//! Degreewise dimension of invariants by exact linear algebra.

use rustc_hash::{FxHashMap, FxHashSet};

use super::action::WeylAction;
use crate::error::{Error, Result};
use crate::exactalg::{
    coordinates, graded_component_basis, index_basis, Coeff, Monomial, Poly, SparseRows, SubstHom,
    DEFAULT_MONOMIAL_GUARD,
};

/// How [`invariant_dimension_with`] assembles its linear system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantMethod {
    /// Kernel of `v -> ((g - 1) v)_g` over the whole monomial basis.
    Stacked,
    /// First the invariants of the generators that permute monomials (one
    /// vector per orbit, or none if the orbit carries a nontrivial character),
    /// then the kernel of the remaining generators on that subspace.
    Orbits,
}

/// `dim` of the degree-`d` invariants, with the default guard and method.
pub fn brute_invariant_dimension(action: &WeylAction, d: u32) -> Result<usize> {
    invariant_dimension_with(action, d, InvariantMethod::Orbits, DEFAULT_MONOMIAL_GUARD)
}

pub fn invariant_dimension_with(action: &WeylAction, d: u32, method: InvariantMethod, guard: usize) -> Result<usize> {
    let ring = action.ring();
    let basis = graded_component_basis(ring, d, None);
    if basis.len() > guard {
        return Err(Error::GuardExceeded { count: basis.len(), limit: guard });
    }
    let index = index_basis(&basis);
    let p = action.characteristic();
    let n = basis.len();
    match method {
        InvariantMethod::Stacked => {
            let gens: Vec<&SubstHom> = action.generators().iter().map(|g| &g.hom).collect();
            let mut rows = SparseRows::new(p, n * gens.len().max(1));
            for m in &basis {
                let f = Poly::monomial(ring, m.clone());
                let mut row = Vec::new();
                for (k, g) in gens.iter().enumerate() {
                    let diff = g.apply(&f)?.try_sub(&f)?;
                    row.extend(coordinates(&diff, &index)?.into_iter().map(|(c, v)| (k * n + c, v)));
                }
                rows.push(row);
            }
            Ok(n - rows.rank()?)
        }
        InvariantMethod::Orbits => {
            let (mono, other): (Vec<&SubstHom>, Vec<&SubstHom>) =
                action.generators().iter().map(|g| &g.hom).partition(|h| h.is_monomial_map());
            let orbit_vectors = orbit_invariants(&basis, &mono, ring.coeff_ring().one());
            if other.is_empty() {
                return Ok(orbit_vectors.len());
            }
            let mut images: FxHashMap<(usize, Monomial), Poly> = FxHashMap::default();
            let mut rows = SparseRows::new(p, n * other.len());
            for v in &orbit_vectors {
                let mut row = Vec::new();
                for (k, g) in other.iter().enumerate() {
                    let mut diff = Poly::zero(ring);
                    for (m, c) in v {
                        let key = (k, m.clone());
                        if !images.contains_key(&key) {
                            let f = Poly::monomial(ring, m.clone());
                            images.insert(key.clone(), g.apply(&f)?.try_sub(&f)?);
                        }
                        diff = &diff + &images[&key].scale(c);
                    }
                    row.extend(coordinates(&diff, &index)?.into_iter().map(|(c, v)| (k * n + c, v)));
                }
                rows.push(row);
            }
            Ok(orbit_vectors.len() - rows.rank()?)
        }
    }
}

/// Where a monomial-permuting homomorphism sends a monomial: `c * m'`.
fn monomial_image(h: &SubstHom, m: &Monomial) -> (Coeff, Monomial) {
    let ring = h.target();
    let mut exps = vec![0u32; ring.nvars()];
    let mut c = ring.coeff_ring().one();
    for (v, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let img = h.image(v).expect("monomial maps have every image");
        let (im, ic) = img.terms().next().expect("monomial maps have nonzero images");
        let target = im.exponents().iter().position(|&x| x == 1).unwrap();
        exps[target] += e;
        for _ in 0..e {
            c = c.mul(ic);
        }
    }
    (c, ring.monomial(&exps))
}

/// Basis of the invariants of the group generated by monomial maps, as
/// sparse vectors over the monomials of one degree.
fn orbit_invariants(basis: &[Monomial], gens: &[&SubstHom], one: Coeff) -> Vec<Vec<(Monomial, Coeff)>> {
    let mut done: FxHashSet<Monomial> = FxHashSet::default();
    let mut out = Vec::new();
    for m0 in basis {
        if done.contains(m0) {
            continue;
        }
        let mut coef: FxHashMap<Monomial, Coeff> = FxHashMap::default();
        coef.insert(m0.clone(), one.clone());
        let mut stack = vec![m0.clone()];
        let mut consistent = true;
        while let Some(m) = stack.pop() {
            let a = coef[&m].clone();
            for g in gens {
                let (c, m2) = monomial_image(g, &m);
                // g(a m) = a c m2 must match the coefficient at m2
                let want = a.mul(&c);
                match coef.get(&m2) {
                    Some(b) if *b != want => consistent = false,
                    Some(_) => {}
                    None => {
                        coef.insert(m2.clone(), want);
                        stack.push(m2);
                    }
                }
            }
        }
        done.extend(coef.keys().cloned());
        if consistent {
            let mut v: Vec<(Monomial, Coeff)> = coef.into_iter().collect();
            v.sort_by(|a, b| b.0.cmp(&a.0));
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupdata::Family;
    use crate::invariants::action::{classical_action, spin_action, symmetric_quotient_action};

    #[test]
    fn constants_are_invariant() {
        let a = spin_action(7, 2).unwrap();
        assert_eq!(brute_invariant_dimension(&a, 0).unwrap(), 1);
    }

    #[test]
    fn methods_agree() {
        let actions = [
            spin_action(7, 2).unwrap(),
            spin_action(8, 2).unwrap(),
            classical_action(Family::B, 3, 3).unwrap(),
            classical_action(Family::D, 3, 2).unwrap(),
            classical_action(Family::D, 3, 5).unwrap(),
            symmetric_quotient_action(4).unwrap(),
        ];
        for a in &actions {
            for d in 0..=6 {
                let s = invariant_dimension_with(a, d, InvariantMethod::Stacked, 10_000).unwrap();
                let o = invariant_dimension_with(a, d, InvariantMethod::Orbits, 10_000).unwrap();
                assert_eq!(s, o, "{} d={d}", a.label);
            }
        }
    }

    #[test]
    fn small_known_values() {
        assert_eq!(brute_invariant_dimension(&spin_action(7, 2).unwrap(), 2).unwrap(), 1);
        assert_eq!(brute_invariant_dimension(&spin_action(7, 2).unwrap(), 1).unwrap(), 0);
        assert_eq!(brute_invariant_dimension(&classical_action(Family::D, 3, 2).unwrap(), 1).unwrap(), 1);
        // full symmetric functions in degree 3: e1^3, e1 e2, e3
        assert_eq!(brute_invariant_dimension(&classical_action(Family::B, 3, 2).unwrap(), 3).unwrap(), 3);
        // odd characteristic: only even polynomials in each x_i survive
        assert_eq!(brute_invariant_dimension(&classical_action(Family::B, 3, 3).unwrap(), 3).unwrap(), 0);
        assert_eq!(brute_invariant_dimension(&classical_action(Family::B, 3, 3).unwrap(), 4).unwrap(), 2);
    }

    #[test]
    fn guard() {
        let a = spin_action(11, 2).unwrap();
        assert!(matches!(
            invariant_dimension_with(&a, 16, InvariantMethod::Orbits, 100),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
