//! Rank of sparse matrices over `F_p`.
//!
//! Rows and columns with a single live entry are peeled off first (each such
//! entry is a pivot that cannot interact with the rest of the matrix); the
//! remaining core goes through dense elimination.

use super::matrix::ModMatrix;
use crate::error::Result;

/// A sparse matrix given by rows of `(column, residue)` entries.
#[derive(Clone, Debug, Default)]
pub struct SparseRows {
    pub modulus: u64,
    pub cols: usize,
    pub rows: Vec<Vec<(usize, u64)>>,
}

impl SparseRows {
    pub fn new(modulus: u64, cols: usize) -> SparseRows {
        SparseRows { modulus, cols, rows: Vec::new() }
    }

    /// Appends a row; zero entries are dropped and repeated columns summed.
    pub fn push(&mut self, mut entries: Vec<(usize, u64)>) {
        let p = self.modulus;
        entries.sort_unstable_by_key(|e| e.0);
        let mut row: Vec<(usize, u64)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            assert!(c < self.cols, "column out of range");
            match row.last_mut() {
                Some(last) if last.0 == c => last.1 = (last.1 + v) % p,
                _ => row.push((c, v % p)),
            }
        }
        row.retain(|e| e.1 != 0);
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    pub fn rank(&self) -> Result<usize> {
        let ncols = self.cols;
        let nrows = self.rows.len();
        let mut row_alive = vec![true; nrows];
        let mut col_alive = vec![true; ncols];
        let mut row_count: Vec<usize> = self.rows.iter().map(|r| r.len()).collect();
        let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for &(c, _) in r {
                col_rows[c].push(i);
            }
        }
        let mut col_count: Vec<usize> = col_rows.iter().map(|v| v.len()).collect();
        let mut rank = 0;

        let kill_row = |i: usize,
                            row_alive: &mut Vec<bool>,
                            col_count: &mut Vec<usize>,
                            col_alive: &Vec<bool>| {
            row_alive[i] = false;
            for &(c, _) in &self.rows[i] {
                if col_alive[c] {
                    col_count[c] -= 1;
                }
            }
        };

        loop {
            let mut changed = false;
            for i in 0..nrows {
                if !row_alive[i] {
                    continue;
                }
                if row_count[i] == 0 {
                    kill_row(i, &mut row_alive, &mut col_count, &col_alive);
                    changed = true;
                } else if row_count[i] == 1 {
                    let c = self.rows[i].iter().find(|e| col_alive[e.0]).unwrap().0;
                    kill_row(i, &mut row_alive, &mut col_count, &col_alive);
                    col_alive[c] = false;
                    for &j in &col_rows[c] {
                        if row_alive[j] {
                            row_count[j] -= 1;
                        }
                    }
                    rank += 1;
                    changed = true;
                }
            }
            for c in 0..ncols {
                if col_alive[c] && col_count[c] == 1 {
                    let i = *col_rows[c].iter().find(|&&j| row_alive[j]).unwrap();
                    kill_row(i, &mut row_alive, &mut col_count, &col_alive);
                    col_alive[c] = false;
                    for &j in &col_rows[c] {
                        if row_alive[j] {
                            row_count[j] -= 1;
                        }
                    }
                    rank += 1;
                    changed = true;
                } else if col_alive[c] && col_count[c] == 0 {
                    col_alive[c] = false;
                }
            }
            if !changed {
                break;
            }
        }

        let live_cols: Vec<usize> = (0..ncols).filter(|&c| col_alive[c]).collect();
        let live_rows: Vec<usize> = (0..nrows).filter(|&i| row_alive[i]).collect();
        if live_cols.is_empty() || live_rows.is_empty() {
            return Ok(rank);
        }
        let mut col_index = vec![usize::MAX; ncols];
        for (k, &c) in live_cols.iter().enumerate() {
            col_index[c] = k;
        }
        let mut dense = ModMatrix::zeros(self.modulus, live_rows.len(), live_cols.len())?;
        for (k, &i) in live_rows.iter().enumerate() {
            for &(c, v) in &self.rows[i] {
                if col_alive[c] {
                    dense.add_to(k, col_index[c], v);
                }
            }
        }
        Ok(rank + dense.rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_rank(s: &SparseRows) -> usize {
        let mut m = ModMatrix::zeros(s.modulus, s.rows.len(), s.cols).unwrap();
        for (i, r) in s.rows.iter().enumerate() {
            for &(c, v) in r {
                m.add_to(i, c, v);
            }
        }
        m.rank()
    }

    #[test]
    fn peeling_matches_dense_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for p in [2u64, 3, 5] {
            for _ in 0..200 {
                let cols = rng.gen_range(1..30);
                let mut s = SparseRows::new(p, cols);
                for _ in 0..rng.gen_range(0..35) {
                    let k = rng.gen_range(1..4);
                    s.push((0..k).map(|_| (rng.gen_range(0..cols), rng.gen_range(1..p))).collect());
                }
                assert_eq!(s.rank().unwrap(), dense_rank(&s));
            }
        }
    }

    #[test]
    fn duplicate_entries_cancel() {
        let mut s = SparseRows::new(2, 3);
        s.push(vec![(1, 1), (1, 1)]);
        assert!(s.rows.is_empty());
        s.push(vec![(0, 1), (2, 1)]);
        s.push(vec![(0, 1), (2, 1)]);
        assert_eq!(s.rank().unwrap(), 1);
    }
}
