//! Quillen's presentation of the mod 2 cohomology of BSpin(n).

use serde::{Deserialize, Serialize};

use super::sw::SWRing;
use crate::charclass::{dim_degree_guarded, Generator, GradedPresentation};
use crate::error::{Error, Result};
use crate::exactalg::{CoeffRing, Poly, SubstHom, DEFAULT_MONOMIAL_GUARD};
use crate::groupdata::Series;

/// Length of the regular sequence, by `n mod 8`.
pub fn h_value(n: u32) -> Result<u32> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("h_value needs n >= 3, got {n}")));
    }
    let l = (n - 1) / 8;
    let h = match (n - 1) % 8 + 1 {
        1 => 4 * l,
        2 => 4 * l + 1,
        3 | 4 => 4 * l + 2,
        _ => 4 * l + 3,
    };
    Ok(h)
}

/// `theta_0 = w_2`, `theta_{i+1} = Sq^{2^i} theta_i`, `h` terms, in `H*(BSO(n))`.
pub fn theta_sequence(ring: &SWRing) -> Result<Vec<Poly>> {
    if !ring.is_oriented() {
        return Err(Error::InvalidArgument("theta_sequence lives in H*(BSO(n)), with w1 = 0".into()));
    }
    let h = h_value(ring.n())?;
    let mut out: Vec<Poly> = Vec::with_capacity(h as usize);
    for i in 0..h {
        let next = match out.last() {
            None => ring.w(2),
            Some(prev) => ring.sq(1 << (i - 1), prev)?,
        };
        out.push(next);
    }
    Ok(out)
}

/// `H*(BSO(n))/J (x) k[w_{2^h}(Delta)]`.
#[derive(Debug)]
pub struct QuillenPresentation {
    pub n: u32,
    pub h: u32,
    pub ambient: SWRing,
    pub theta: Vec<Poly>,
    pub extra_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuillenSummary {
    pub n: u32,
    pub h: u32,
    pub theta_degrees: Vec<u32>,
    pub extra_degree: u32,
    pub theta: Vec<String>,
}

pub fn quillen_presentation(n: u32) -> Result<QuillenPresentation> {
    if n < 6 {
        return Err(Error::Unsupported(format!("Spin({n}) has an exceptional isomorphism; quillen_presentation needs n >= 6")));
    }
    let ambient = SWRing::bso(n)?;
    let theta = theta_sequence(&ambient)?;
    let h = theta.len() as u32;
    Ok(QuillenPresentation { n, h, ambient, theta, extra_degree: 1 << h })
}

impl QuillenPresentation {
    pub fn theta_degrees(&self) -> Vec<u32> {
        self.theta.iter().map(|t| t.homogeneous_degree().ok().flatten().unwrap_or(0)).collect()
    }

    /// Name of the extra polynomial generator.
    pub fn extra_name(&self) -> String {
        format!("d{}", self.extra_degree)
    }

    /// Complete-intersection Hilbert series.
    pub fn series(&self) -> Series {
        let mut gens: Vec<u32> = (2..=self.n).collect();
        gens.push(self.extra_degree);
        Series::complete_intersection(&gens, &self.theta_degrees())
    }

    /// The same ring as an explicit presentation for linear algebra.
    pub fn to_graded(&self) -> Result<GradedPresentation> {
        let mut gens: Vec<Generator> = (2..=self.n).map(|i| Generator::new(&format!("w{i}"), i)).collect();
        gens.push(Generator::new(&self.extra_name(), self.extra_degree));
        let pres = GradedPresentation::new(&format!("H*(BSpin({}))", self.n), gens, CoeffRing::F2)?;
        let target = pres.ring().clone();
        let include = SubstHom::new(
            self.ambient.ring(),
            &target,
            (0..self.n as usize - 1).map(|v| Some(Poly::var(&target, v))).collect(),
        )?;
        let rels = self.theta.iter().map(|t| include.apply(t)).collect::<Result<Vec<_>>>()?;
        pres.with_relations(rels, true)
    }

    pub fn summary(&self) -> QuillenSummary {
        QuillenSummary {
            n: self.n,
            h: self.h,
            theta_degrees: self.theta_degrees(),
            extra_degree: self.extra_degree,
            theta: self.theta.iter().map(|t| t.to_string()).collect(),
        }
    }
}

/// `dim H^d(BSpin(n); F_2)` from the series, checked against linear algebra.
pub fn quillen_dim(n: u32, d: u32) -> Result<usize> {
    let q = quillen_presentation(n)?;
    quillen_dim_with(&q, &q.to_graded()?, d)
}

/// [`quillen_dim`] with the presentation already built.
pub fn quillen_dim_with(q: &QuillenPresentation, graded: &GradedPresentation, d: u32) -> Result<usize> {
    let series = q.series().coefficient(d as usize);
    let direct = dim_degree_guarded(graded, d, DEFAULT_MONOMIAL_GUARD)?;
    if series != direct as i128 {
        return Err(Error::Verification(format!(
            "Spin({}) degree {d}: series gives {series}, linear algebra gives {direct}",
            q.n
        )));
    }
    Ok(direct)
}

/// Dimensions in degrees `0..=max` from both pipelines.
pub fn quillen_dims(n: u32, max: u32) -> Result<Vec<usize>> {
    let q = quillen_presentation(n)?;
    let g = q.to_graded()?;
    (0..=max).map(|d| quillen_dim_with(&q, &g, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_table() {
        assert_eq!(h_value(11).unwrap(), 6);
        assert_eq!(h_value(10).unwrap(), 5);
        assert_eq!(h_value(16).unwrap(), 7);
        assert_eq!(h_value(9).unwrap(), 4);
        assert_eq!(h_value(17).unwrap(), 8);
        let want = [(3, 2), (4, 2), (5, 3), (6, 3), (7, 3), (8, 3)];
        for (n, h) in want {
            assert_eq!(h_value(n).unwrap(), h, "n={n}");
        }
        assert!(h_value(2).is_err());
    }

    #[test]
    fn theta_for_spin11() {
        let q = quillen_presentation(11).unwrap();
        assert_eq!(q.theta_degrees(), [2, 3, 5, 9, 17, 33]);
        assert_eq!(q.extra_degree, 64);
        assert_eq!(q.theta[1], q.ambient.w(3));
        let s = q.series();
        let mut den: Vec<u32> = (2..=11).collect();
        den.push(64);
        assert_eq!(s.denominator(), den.as_slice());
    }

    #[test]
    fn low_degrees() {
        let dims = quillen_dims(11, 8).unwrap();
        assert_eq!(dims[0], 1);
        assert_eq!(dims[2], 0);
        // w4, then w6 and nothing in degree 5
        assert_eq!(&dims[3..=6], &[0, 1, 0, 1]);
        assert!(quillen_presentation(5).is_err());
    }
}
