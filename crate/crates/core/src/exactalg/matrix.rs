//! Dense linear algebra over small prime fields.
//!
//! Over `F_2` rows are packed into 64-bit words so that one XOR clears 64
//! columns at a time. Other primes use one `u32` per entry.

use crate::error::{Error, Result};

/// A dense matrix over `F_2`, row-major, 64 columns per word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> F2Matrix {
        let words = cols.div_ceil(64);
        F2Matrix { rows, cols, words, bits: vec![0; rows * words] }
    }

    pub fn identity(n: usize) -> F2Matrix {
        let mut m = F2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> F2Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = F2Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.bits[r * self.words + c / 64] >> (c % 64)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.bits[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        self.bits[r * self.words + c / 64] ^= 1 << (c % 64);
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    fn xor_rows(&mut self, dst: usize, src: usize, from_word: usize) {
        let w = self.words;
        let (a, b) = if dst < src {
            let (lo, hi) = self.bits.split_at_mut(src * w);
            (&mut lo[dst * w..dst * w + w], &hi[..w])
        } else {
            let (lo, hi) = self.bits.split_at_mut(dst * w);
            (&mut hi[..w], &lo[src * w..src * w + w])
        };
        for k in from_word..w {
            a[k] ^= b[k];
        }
    }

    /// Reduces in place to row echelon form; returns pivot columns.
    pub fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let word = c / 64;
            let mask = 1u64 << (c % 64);
            let Some(p) = (r..self.rows).find(|&i| self.bits[i * self.words + word] & mask != 0) else {
                continue;
            };
            if p != r {
                for k in 0..self.words {
                    self.bits.swap(p * self.words + k, r * self.words + k);
                }
            }
            for i in 0..self.rows {
                if i != r && self.bits[i * self.words + word] & mask != 0 {
                    self.xor_rows(i, r, word);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank by row elimination.
    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            // Fewer, longer rows are cheaper to eliminate.
            return self.transpose().rank_rows();
        }
        self.rank_rows()
    }

    fn rank_rows(&self) -> usize {
        let mut m = self.clone();
        m.rank_in_place()
    }

    /// Forward elimination only (no back-substitution), consuming the rows.
    fn rank_in_place(&mut self) -> usize {
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let word = c / 64;
            let mask = 1u64 << (c % 64);
            let Some(p) = (r..self.rows).find(|&i| self.bits[i * self.words + word] & mask != 0) else {
                continue;
            };
            if p != r {
                for k in 0..self.words {
                    self.bits.swap(p * self.words + k, r * self.words + k);
                }
            }
            for i in r + 1..self.rows {
                if self.bits[i * self.words + word] & mask != 0 {
                    self.xor_rows(i, r, word);
                }
            }
            r += 1;
        }
        r
    }

    /// Rank by column elimination (row elimination of the transpose).
    pub fn rank_by_columns(&self) -> usize {
        self.transpose().rank_rows()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.echelonize();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![false; self.cols];
            v[free] = true;
            for (row, &c) in pivots.iter().enumerate() {
                if m.get(row, free) {
                    v[c] = true;
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn kernel_dimension(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn mul_vec(&self, v: &[bool]) -> Vec<bool> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).filter(|&c| v[c] && self.get(r, c)).count() % 2 == 1)
            .collect()
    }
}

/// A dense matrix over `F_p` for an odd prime `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> FpMatrix {
        assert!(p >= 2 && p <= u32::MAX as u64);
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c] as u64
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = (v % self.p) as u32;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: u64) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v % self.p);
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    fn inv(&self, a: u64) -> u64 {
        super::coeff::pow_mod(a, self.p - 2, self.p)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn echelonize(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for k in 0..self.cols {
                    self.data.swap(piv * self.cols + k, r * self.cols + k);
                }
            }
            let inv = self.inv(self.get(r, c));
            for k in c..self.cols {
                let v = self.get(r, k) * inv % p;
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                let f = self.get(i, c);
                if i != r && f != 0 {
                    for k in c..self.cols {
                        let v = (self.get(i, k) + p * p - f * self.get(r, k)) % p;
                        self.set(i, k, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelonize().len()
    }

    pub fn rank_by_columns(&self) -> usize {
        self.transpose().rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.echelonize();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = (p - m.get(row, free)) % p;
            }
            basis.push(v);
        }
        basis
    }

    pub fn kernel_dimension(&self) -> usize {
        self.cols - self.rank()
    }
}

/// A dense matrix over `F_p`, bit-packed when `p = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModMatrix {
    F2(F2Matrix),
    Fp(FpMatrix),
}

impl ModMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Result<ModMatrix> {
        if !super::coeff::is_prime(p) {
            return Err(Error::Unsupported(format!("linear algebra needs a prime modulus, got {p}")));
        }
        Ok(if p == 2 { ModMatrix::F2(F2Matrix::zeros(rows, cols)) } else { ModMatrix::Fp(FpMatrix::zeros(p, rows, cols)) })
    }

    pub fn rows(&self) -> usize {
        match self {
            ModMatrix::F2(m) => m.rows(),
            ModMatrix::Fp(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            ModMatrix::F2(m) => m.cols(),
            ModMatrix::Fp(m) => m.cols(),
        }
    }

    /// Adds `v` (a residue) to entry `(r, c)`.
    pub fn add_to(&mut self, r: usize, c: usize, v: u64) {
        match self {
            ModMatrix::F2(m) => {
                if v % 2 == 1 {
                    m.flip(r, c)
                }
            }
            ModMatrix::Fp(m) => m.add_to(r, c, v),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            ModMatrix::F2(m) => m.rank(),
            ModMatrix::Fp(m) => m.rank(),
        }
    }

    pub fn rank_by_columns(&self) -> usize {
        match self {
            ModMatrix::F2(m) => m.rank_by_columns(),
            ModMatrix::Fp(m) => m.rank_by_columns(),
        }
    }

    pub fn kernel_dimension(&self) -> usize {
        self.cols() - self.rank()
    }
}

/// Dimension of the right kernel of an `F_2` or `F_p` matrix.
pub fn fp_kernel_dimension(m: &ModMatrix) -> usize {
    m.kernel_dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_identity_kernels() {
        assert_eq!(F2Matrix::zeros(3, 5).kernel_dimension(), 5);
        assert_eq!(F2Matrix::identity(4).kernel_dimension(), 0);
        assert_eq!(ModMatrix::zeros(3, 3, 5).unwrap().kernel_dimension(), 5);
        assert!(ModMatrix::zeros(4, 1, 1).is_err());
    }

    #[test]
    fn kernel_vectors_are_in_kernel() {
        let m = F2Matrix::from_rows(&[
            vec![true, true, false, true, false, false, true],
            vec![false, true, true, false, true, false, false],
            vec![true, false, true, true, true, false, true],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_by_columns(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 5);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|b| !b));
        }
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let n = 150;
        let mut m = F2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
            m.set(i, (i + 1) % n, true);
        }
        // circulant 1 + x over F_2 has a one-dimensional kernel (all ones)
        assert_eq!(m.rank(), n - 1);
        assert_eq!(m.kernel_basis(), vec![vec![true; n]]);
    }

    #[test]
    fn fp_rank_and_kernel() {
        let mut m = FpMatrix::zeros(3, 2, 3);
        // [1 2 0; 2 1 0] has rank 1 mod 3
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 0, 2);
        m.set(1, 1, 1);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank_by_columns(), 1);
        for v in m.kernel_basis() {
            for r in 0..2 {
                let s: u64 = (0..3).map(|c| m.get(r, c) * v[c]).sum();
                assert_eq!(s % 3, 0);
            }
        }
    }
}
