//! Weyl group enumeration: explicit signed permutations for the classical
//! types, and breadth-first search over simple reflections for lengths.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::catalog::{fundamental_degrees, CartanType, Family, GroupSpec};
use super::series::Series;
use crate::error::{Error, Result};

/// Largest rank for which [`weyl_elements`] lists elements explicitly.
pub const MAX_EXPLICIT_RANK: u32 = 5;

/// Cap on the number of group elements visited by the length search.
pub const WEYL_BFS_LIMIT: usize = 1_000_000;

/// `x_i -> sign_i * x_{perm_i}` on the coordinates of a torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm { perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        SignedPerm { perm, signs }
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for i in 0..v.len() {
            out[self.perm[i]] += self.signs[i] as i64 * v[i];
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

/// Explicit Weyl group of a classical group, as signed permutations of the
/// torus coordinates. Type A acts on `l + 1` coordinates; B, C and O allow all
/// sign patterns; D, SO(2r) and Spin(2r) only the even ones.
pub fn weyl_elements(g: &GroupSpec) -> Result<Vec<SignedPerm>> {
    if g.family.is_exceptional() {
        return Err(Error::Unsupported(format!(
            "{g} is exceptional; use weyl_length_series for its Weyl group"
        )));
    }
    let rank = g.rank();
    if rank > MAX_EXPLICIT_RANK {
        return Err(Error::Unsupported(format!(
            "explicit Weyl enumeration is limited to rank {MAX_EXPLICIT_RANK}; \
             use the action generators in the invariants module for {g}"
        )));
    }
    let (coords, signs) = match g.family {
        Family::A => (g.n as usize + 1, SignRule::None),
        Family::GL => (g.n as usize, SignRule::None),
        Family::B | Family::C | Family::Sp | Family::O => (rank as usize, SignRule::All),
        Family::D => (rank as usize, SignRule::Even),
        Family::SO | Family::Spin if g.n % 2 == 1 => (rank as usize, SignRule::All),
        Family::SO | Family::Spin => (rank as usize, SignRule::Even),
        _ => unreachable!(),
    };
    let mut out = Vec::new();
    for perm in permutations(coords) {
        let patterns: u32 = if matches!(signs, SignRule::None) { 1 } else { 1 << coords };
        for mask in 0..patterns {
            if matches!(signs, SignRule::Even) && mask.count_ones() % 2 == 1 {
                continue;
            }
            let sg = (0..coords).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push(SignedPerm { perm: perm.clone(), signs: sg });
        }
    }
    Ok(out)
}

enum SignRule {
    None,
    All,
    Even,
}

/// `sum_{w in W} q^{l(w)}` for one irreducible type, with lengths found by
/// breadth-first search in the Cayley graph of the simple reflections.
///
/// Elements are tracked through their action on `rho` (written in the basis
/// of fundamental weights), which has trivial stabiliser.
pub fn cartan_length_series(t: CartanType, limit: usize) -> Result<Vec<i128>> {
    let a = t.cartan_matrix();
    let n = a.len();
    let start = vec![1i64; n];
    let mut seen: FxHashMap<Vec<i64>, u32> = FxHashMap::default();
    seen.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    let mut counts: Vec<i128> = vec![1];
    while let Some(v) = queue.pop_front() {
        let len = seen[&v];
        for i in 0..n {
            // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i; alpha_i has
            // fundamental-weight coordinates a[i][j]
            let c = v[i];
            let w: Vec<i64> = (0..n).map(|j| v[j] - c * a[i][j]).collect();
            if seen.contains_key(&w) {
                continue;
            }
            if seen.len() >= limit {
                return Err(Error::GuardExceeded { count: seen.len() + 1, limit });
            }
            let l = len + 1;
            if counts.len() <= l as usize {
                counts.push(0);
            }
            counts[l as usize] += 1;
            seen.insert(w.clone(), l);
            queue.push_back(w);
        }
    }
    Ok(counts)
}

/// Length generating function of the Weyl group of `g`, by enumeration.
pub fn weyl_length_series(g: &GroupSpec) -> Result<Series> {
    let mut s = Series::one();
    for t in g.weyl_components() {
        s = s.mul(&Series::polynomial(cartan_length_series(t, WEYL_BFS_LIMIT)?));
    }
    Ok(s)
}

/// Order of the Weyl group from the fundamental degrees.
pub fn weyl_order(g: &GroupSpec) -> u128 {
    fundamental_degrees(g).product()
}

/// Poincaré polynomial of the full flag variety, `prod (1 - q^{d_i}) / (1 - q)^r`.
pub fn flag_poincare(g: &GroupSpec) -> Series {
    let d = fundamental_degrees(g);
    let num = Series::complete_intersection(&[], d.degrees());
    Series::new(num.numerator().to_vec(), vec![1; d.degrees().len()])
}

/// Poincaré polynomial `prod_{i=1}^{s} (1 + q^i)` of the maximal isotropic
/// Grassmannian of SO(n), where `s = floor((n - 1) / 2)`.
pub fn isotropic_grassmannian_poincare(n: u32) -> Result<Series> {
    if n < 2 {
        return Err(Error::InvalidArgument("the isotropic Grassmannian needs n >= 2".into()));
    }
    let s = (n - 1) / 2;
    Ok((1..=s).fold(Series::one(), |acc, i| acc.mul(&Series::exterior(i))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupSpec {
        GroupSpec::parse(s).unwrap()
    }

    #[test]
    fn element_counts() {
        assert_eq!(weyl_elements(&g("B2")).unwrap().len(), 8);
        assert_eq!(weyl_elements(&g("D3")).unwrap().len(), 24);
        assert_eq!(weyl_elements(&g("A2")).unwrap().len(), 6);
        assert_eq!(weyl_elements(&g("SO(10)")).unwrap().len(), 1920);
        assert!(weyl_elements(&g("B6")).is_err());
        assert!(weyl_elements(&g("G2")).is_err());
    }

    #[test]
    fn d_type_has_only_even_sign_changes() {
        for w in weyl_elements(&g("D4")).unwrap() {
            assert_eq!(w.negative_count() % 2, 0);
        }
    }

    #[test]
    fn explicit_elements_form_a_group() {
        let els = weyl_elements(&g("B3")).unwrap();
        let set: std::collections::BTreeSet<_> = els.iter().cloned().collect();
        for a in els.iter().step_by(5) {
            for b in &els {
                assert!(set.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn flag_polynomials() {
        assert_eq!(flag_poincare(&g("A1")).to_polynomial().unwrap(), vec![1, 1]);
        assert_eq!(flag_poincare(&g("B2")).to_polynomial().unwrap(), vec![1, 2, 2, 2, 1]);
        assert_eq!(flag_poincare(&g("G2")).eval_at_one(), Some(12));
    }

    #[test]
    fn bfs_lengths_match_degrees() {
        for name in ["A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "SO(4)", "GL(3)", "O(5)"] {
            let spec = g(name);
            let bfs = weyl_length_series(&spec).unwrap().to_polynomial().unwrap();
            assert_eq!(bfs, flag_poincare(&spec).to_polynomial().unwrap(), "{name}");
            assert_eq!(bfs.iter().sum::<i128>() as u128, weyl_order(&spec), "{name}");
        }
    }

    #[test]
    fn grassmannian() {
        let s = isotropic_grassmannian_poincare(7).unwrap();
        assert_eq!(s.to_polynomial().unwrap(), vec![1, 1, 1, 2, 1, 1, 1]);
        assert!(isotropic_grassmannian_poincare(2).unwrap().to_polynomial().unwrap() == vec![1]);
        assert_eq!(isotropic_grassmannian_poincare(11).unwrap().eval_at_one(), Some(32));
    }
}
