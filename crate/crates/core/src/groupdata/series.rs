//! Hilbert and Poincaré series as rational functions `N(q) / prod (1 - q^d)`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// `numerator(q) / prod_{d in denominator} (1 - q^d)` with integer numerator.
///
/// Denominators stay factored; coefficients are only expanded on demand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series {
    numerator: Vec<i128>,
    denominator: Vec<u32>,
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = x.checked_mul(*y).expect("series coefficient overflow");
            out[i + j] = out[i + j].checked_add(t).expect("series coefficient overflow");
        }
    }
    out
}

impl Series {
    pub fn new(numerator: Vec<i128>, mut denominator: Vec<u32>) -> Series {
        assert!(denominator.iter().all(|&d| d > 0), "denominator degrees must be positive");
        denominator.sort_unstable();
        Series { numerator: trim(numerator), denominator }
    }

    pub fn one() -> Series {
        Series::new(vec![1], vec![])
    }

    pub fn polynomial(coeffs: Vec<i128>) -> Series {
        Series::new(coeffs, vec![])
    }

    /// `1 / prod (1 - q^d)`: the series of a polynomial ring with generators
    /// in the given degrees.
    pub fn polynomial_ring(degrees: &[u32]) -> Series {
        Series::new(vec![1], degrees.to_vec())
    }

    /// `prod (1 - q^r) / prod (1 - q^g)`: a complete intersection with
    /// generators of degrees `gens` and a regular sequence of degrees `rels`.
    pub fn complete_intersection(gens: &[u32], rels: &[u32]) -> Series {
        let mut num = vec![1i128];
        for &r in rels {
            num = poly_mul(&num, &one_minus_q_pow(r));
        }
        Series::new(num, gens.to_vec())
    }

    /// `1 + q^d`, the series of an exterior algebra on one generator.
    pub fn exterior(d: u32) -> Series {
        let mut c = vec![0; d as usize + 1];
        c[0] = 1;
        c[d as usize] = 1;
        Series::polynomial(c)
    }

    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    pub fn mul(&self, other: &Series) -> Series {
        let mut den = self.denominator.clone();
        den.extend_from_slice(&other.denominator);
        Series::new(poly_mul(&self.numerator, &other.numerator), den)
    }

    /// Coefficients of `q^0 ..= q^order`.
    pub fn coefficients(&self, order: usize) -> Vec<i128> {
        let mut c: Vec<i128> = (0..=order).map(|i| self.numerator.get(i).copied().unwrap_or(0)).collect();
        // dividing by (1 - q^d) is the prefix recurrence c[k] += c[k - d]
        for &d in &self.denominator {
            let d = d as usize;
            for k in d..=order {
                c[k] = c[k].checked_add(c[k - d]).expect("series coefficient overflow");
            }
        }
        c
    }

    pub fn coefficient(&self, d: usize) -> i128 {
        self.coefficients(d)[d]
    }

    /// The series as an exact polynomial, when the denominator divides the numerator.
    pub fn to_polynomial(&self) -> Option<Vec<i128>> {
        let mut num = self.numerator.clone();
        for &d in &self.denominator {
            num = divide_one_minus_q_pow(&num, d)?;
        }
        Some(trim(num))
    }

    pub fn is_polynomial(&self) -> bool {
        self.to_polynomial().is_some()
    }

    /// Value at `q = 1` of a polynomial series.
    pub fn eval_at_one(&self) -> Option<i128> {
        self.to_polynomial().map(|p| p.iter().sum())
    }

    pub fn is_palindromic(&self) -> bool {
        match self.to_polynomial() {
            Some(p) => p.iter().eq(p.iter().rev()),
            None => false,
        }
    }
}

fn one_minus_q_pow(d: u32) -> Vec<i128> {
    let mut v = vec![0i128; d as usize + 1];
    v[0] = 1;
    v[d as usize] = -1;
    v
}

/// Exact division by `1 - q^d`; `None` if there is a remainder.
fn divide_one_minus_q_pow(num: &[i128], d: u32) -> Option<Vec<i128>> {
    let d = d as usize;
    let num = trim(num.to_vec());
    if num == [0] {
        return Some(vec![0]);
    }
    if num.len() <= d {
        return None;
    }
    // (1 - q^d) * quot = num  =>  quot[k] = num[k] + quot[k - d]
    let qlen = num.len() - d;
    let mut quot = vec![0i128; qlen];
    for k in 0..qlen {
        quot[k] = num[k] + if k >= d { quot[k - d] } else { 0 };
    }
    let back = poly_mul(&quot, &one_minus_q_pow(d as u32));
    (trim(back) == num).then_some(quot)
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{i}"),
            });
        }
        let num = if parts.is_empty() { "0".to_string() } else { parts.join(" + ").replace("+ -", "- ") };
        if self.denominator.is_empty() {
            write!(f, "{num}")
        } else {
            let den: Vec<String> = self.denominator.iter().map(|d| format!("(1 - q^{d})")).collect();
            write!(f, "({num}) / ({})", den.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_ring_counts_multisets() {
        let s = Series::polynomial_ring(&[2, 3, 4]);
        assert_eq!(s.coefficient(4), 2);
        assert_eq!(Series::polynomial_ring(&[]).coefficients(3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn exact_division_into_polynomial() {
        let s = Series::new(Series::complete_intersection(&[], &[2, 4]).numerator().to_vec(), vec![1, 1]);
        assert_eq!(s.to_polynomial().unwrap(), vec![1, 2, 2, 2, 1]);
        assert_eq!(s.eval_at_one(), Some(8));
        assert!(s.is_palindromic());
        assert!(!Series::polynomial_ring(&[1]).is_polynomial());
    }

    #[test]
    fn exterior_generator_is_one_plus_q() {
        let s = Series::exterior(1).mul(&Series::polynomial_ring(&[2]));
        assert_eq!(s.coefficients(6), vec![1; 7]);
    }

    #[test]
    fn display() {
        assert_eq!(Series::complete_intersection(&[1], &[2]).to_string(), "(1 - 1*q^2) / ((1 - q^1))");
    }
}
