use super::poly::Poly;
use super::ring::Ring;

/// The elementary symmetric polynomial `e_a` of the given elements.
///
/// `e_0 = 1`; for `a > elems.len()` the result is the zero polynomial.
pub fn elementary_symmetric(ring: &Ring, a: usize, elems: &[Poly]) -> Poly {
    if a > elems.len() {
        return Poly::zero(ring);
    }
    // e[k] holds e_k of the prefix processed so far.
    let mut e = vec![Poly::zero(ring); a + 1];
    e[0] = Poly::one(ring);
    for (i, x) in elems.iter().enumerate() {
        for k in (1..=a.min(i + 1)).rev() {
            let add = &e[k - 1] * x;
            e[k] = &e[k] + &add;
        }
    }
    e.swap_remove(a)
}

/// `e_a` of a list of ring variables.
pub fn elementary_symmetric_vars(ring: &Ring, a: usize, vars: &[usize]) -> Poly {
    let elems: Vec<Poly> = vars.iter().map(|&v| Poly::var(ring, v)).collect();
    elementary_symmetric(ring, a, &elems)
}

/// Calls `f` on every `k`-element subset of `0..n`, in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(k);
    go(0, n, k, &mut cur, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{CoeffRing, PolyRing};

    #[test]
    fn small_cases() {
        let r = PolyRing::indexed("t", 1, 3, CoeffRing::F2).unwrap();
        let v = [0, 1, 2];
        assert_eq!(elementary_symmetric_vars(&r, 2, &v).to_string(), "t1*t2 + t1*t3 + t2*t3");
        assert!(elementary_symmetric_vars(&r, 0, &v).is_one());
        assert_eq!(elementary_symmetric_vars(&r, 3, &v).to_string(), "t1*t2*t3");
        assert!(elementary_symmetric_vars(&r, 4, &v).is_zero());
    }

    #[test]
    fn matches_subset_sum() {
        let r = PolyRing::indexed("t", 1, 5, CoeffRing::Integers).unwrap();
        let vars: Vec<usize> = (0..5).collect();
        for a in 0..=5 {
            let mut direct = Poly::zero(&r);
            for_each_subset(5, a, |s| {
                let mut exps = vec![0; 5];
                for &i in s {
                    exps[i] = 1;
                }
                direct = &direct + &Poly::monomial(&r, r.monomial(&exps));
            });
            assert_eq!(elementary_symmetric_vars(&r, a, &vars), direct);
        }
    }
}
