//! Determinants of square polynomial matrices.

use super::poly::Poly;
use super::ring::PolyRing;
use crate::error::{Error, Result};

/// Matrices up to this size use cofactor expansion; larger ones use Bareiss.
pub const COFACTOR_LIMIT: usize = 6;

fn check_square(m: &[Vec<Poly>]) -> Result<usize> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::NotSquare { rows: n, cols: row.len() });
        }
    }
    if let Some(first) = m.first().and_then(|r| r.first()) {
        for p in m.iter().flatten() {
            PolyRing::check_same(first.ring(), p.ring())?;
        }
    }
    Ok(n)
}

/// Exact determinant: cofactor expansion for `n <= 6`, fraction-free
/// Bareiss elimination above that.
pub fn determinant(m: &[Vec<Poly>]) -> Result<Poly> {
    let n = check_square(m)?;
    if n <= COFACTOR_LIMIT {
        determinant_cofactor(m)
    } else {
        determinant_bareiss(m)
    }
}

/// Laplace expansion along the first row, memoised over column subsets.
pub fn determinant_cofactor(m: &[Vec<Poly>]) -> Result<Poly> {
    let n = check_square(m)?;
    if n == 0 {
        return Err(Error::InvalidArgument("determinant of an empty matrix needs a ring".into()));
    }
    assert!(n < 64, "cofactor expansion limited to 63x63");
    let ring = m[0][0].ring().clone();
    // minors[mask] = det of rows (n - |mask|).. restricted to columns in mask
    let mut memo: rustc_hash::FxHashMap<u64, Poly> = rustc_hash::FxHashMap::default();
    fn minor(
        m: &[Vec<Poly>],
        mask: u64,
        memo: &mut rustc_hash::FxHashMap<u64, Poly>,
        ring: &super::ring::Ring,
    ) -> Poly {
        let k = mask.count_ones() as usize;
        if k == 0 {
            return Poly::one(ring);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let row = m.len() - k;
        let mut acc = Poly::zero(ring);
        let mut sign_neg = false;
        for c in 0..m.len() {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &m[row][c];
            if !entry.is_zero() {
                let sub = minor(m, mask & !(1 << c), memo, ring);
                let t = entry * &sub;
                acc = if sign_neg { &acc - &t } else { &acc + &t };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(minor(m, full, &mut memo, &ring))
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn determinant_bareiss(m: &[Vec<Poly>]) -> Result<Poly> {
    let n = check_square(m)?;
    if n == 0 {
        return Err(Error::InvalidArgument("determinant of an empty matrix needs a ring".into()));
    }
    let ring = m[0][0].ring().clone();
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut prev = Poly::one(&ring);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Poly::zero(&ring)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)?
                    .ok_or_else(|| Error::Verification("Bareiss division was not exact".into()))?;
            }
            a[i][k] = Poly::zero(&ring);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{CoeffRing, PolyRing};

    fn mat(r: &super::super::ring::Ring, rows: &[&[&str]]) -> Vec<Vec<Poly>> {
        rows.iter().map(|row| row.iter().map(|s| Poly::parse(r, s).unwrap()).collect()).collect()
    }

    #[test]
    fn two_by_two_vandermonde() {
        let r = PolyRing::indexed("t", 1, 2, CoeffRing::F2).unwrap();
        let m = mat(&r, &[&["1", "t2"], &["1", "t1"]]);
        assert_eq!(determinant(&m).unwrap().to_string(), "t1 + t2");
    }

    #[test]
    fn identity_det_is_one() {
        let r = PolyRing::indexed("t", 1, 2, CoeffRing::Integers).unwrap();
        for n in [1, 3, 7] {
            let m: Vec<Vec<Poly>> = (0..n)
                .map(|i| (0..n).map(|j| Poly::constant(&r, (i == j) as i64)).collect())
                .collect();
            assert!(determinant(&m).unwrap().is_one());
        }
    }

    #[test]
    fn non_square_is_an_error() {
        let r = PolyRing::indexed("t", 1, 2, CoeffRing::F2).unwrap();
        let m = mat(&r, &[&["1", "t2"], &["1"]]);
        assert!(matches!(determinant(&m), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let r = PolyRing::indexed("t", 1, 2, CoeffRing::Integers).unwrap();
        let m = mat(&r, &[&["0", "t1", "1"], &["t2", "0", "1"], &["1", "1", "0"]]);
        assert_eq!(determinant_bareiss(&m).unwrap(), determinant_cofactor(&m).unwrap());
    }
}
