//! Restriction of u-classes to subgroups, the Bockstein on the image ring,
//! and Jacobian certificates for injectivity.

use serde::{Deserialize, Serialize};

use super::presentation::{bo_presentation, bso_presentation, GradedPresentation, Generator};
use crate::error::{Error, Result};
use crate::exactalg::{
    determinant, elementary_symmetric, product, sum, CoeffRing, Poly, PolyRing, Ring, SubstHom,
};

/// A degree-preserving map from a presentation's generators into a target
/// polynomial ring. `radical_quotient` marks targets taken modulo nilpotents
/// (nilpotent generators are simply left out of the target).
#[derive(Clone, Debug)]
pub struct RestrictionHom {
    pub label: String,
    pub source: GradedPresentation,
    pub target: GradedPresentation,
    pub hom: SubstHom,
    pub radical_quotient: bool,
}

impl RestrictionHom {
    pub fn new(
        label: &str,
        source: GradedPresentation,
        target: GradedPresentation,
        images: Vec<Poly>,
        radical_quotient: bool,
    ) -> Result<RestrictionHom> {
        let hom = SubstHom::new(source.ring(), target.ring(), images.into_iter().map(Some).collect())?;
        if !hom.is_degree_preserving() {
            return Err(Error::InvalidArgument(format!("{label}: restriction does not preserve degrees")));
        }
        for r in source.relations() {
            let img = target.reduce_exterior(&hom.apply(r)?);
            if !img.is_zero() {
                return Err(Error::Verification(format!("{label}: relation {r} maps to {img}")));
            }
        }
        for (v, g) in source.generators().iter().enumerate() {
            if g.square_zero {
                let img = hom.image(v).unwrap();
                if !target.reduce_exterior(&(img * img)).is_zero() {
                    return Err(Error::Verification(format!("{label}: {}^2 does not map to 0", g.name)));
                }
            }
        }
        Ok(RestrictionHom { label: label.to_string(), source, target, hom, radical_quotient })
    }

    /// Image of a source generator, by name.
    pub fn image_of(&self, name: &str) -> Result<&Poly> {
        let v = self.source.ring().require_index(name)?;
        Ok(self.hom.image(v).unwrap())
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        self.hom.apply(f)
    }
}

/// `H*(BO(2)^r)/rad = k[s_1..s_r, t_1..t_r]`, `|s_i| = 1`, `|t_i| = 2`.
pub fn bo2_power_target(r: usize) -> Result<GradedPresentation> {
    let mut gens: Vec<Generator> = (1..=r).map(|i| Generator::hodge(&format!("s{i}"), 1, 0)).collect();
    gens.extend((1..=r).map(|i| Generator::hodge(&format!("t{i}"), 1, 1)));
    GradedPresentation::new(&format!("BO(2)^{r}"), gens, CoeffRing::F2)
}

fn s_vars(ring: &Ring, r: usize) -> Vec<Poly> {
    (0..r).map(|i| Poly::var(ring, i)).collect()
}

fn t_vars(ring: &Ring, r: usize) -> Vec<Poly> {
    (0..r).map(|i| Poly::var(ring, r + i)).collect()
}

/// `sum_m s_m e_a(t_i : i != m)`: the image of the BO(2r) class `u_{2a+1}`.
pub fn bilinear_odd_image(ring: &Ring, s: &[Poly], t: &[Poly], a: usize) -> Poly {
    let terms: Vec<Poly> = (0..s.len())
        .map(|m| {
            let others: Vec<Poly> = t.iter().enumerate().filter(|(i, _)| *i != m).map(|(_, p)| p.clone()).collect();
            &s[m] * &elementary_symmetric(ring, a, &others)
        })
        .collect();
    sum(ring, &terms)
}

/// `sum_{|I| = a} (sum_{i in I} s_i) t_I = beta(e_a(t))`: the image of the
/// BSO(2r+1) class `u_{2a+1}`.
pub fn beta_odd_image(ring: &Ring, s: &[Poly], t: &[Poly], a: usize) -> Poly {
    if a == 0 {
        return Poly::zero(ring);
    }
    let terms: Vec<Poly> = (0..s.len())
        .map(|m| {
            let others: Vec<Poly> = t.iter().enumerate().filter(|(i, _)| *i != m).map(|(_, p)| p.clone()).collect();
            &(&s[m] * &t[m]) * &elementary_symmetric(ring, a - 1, &others)
        })
        .collect();
    sum(ring, &terms)
}

/// Restriction from BSO(n) to `BO(2)^r`, `r = floor(n/2)`: `u_{2a} -> e_a(t)`.
/// For `n = 2r + 1` the odd classes go to `beta(e_a(t))`; for `n = 2r` (the
/// classes of BO(2r) pulled back) they go to the bilinear sum
/// `sum_m s_m sum_{I not containing m} t_I`.
pub fn restriction_bso_to_bo2r(n: u32) -> Result<RestrictionHom> {
    if n < 2 {
        return Err(Error::InvalidArgument("restriction_bso_to_bo2r needs n >= 2".into()));
    }
    let r = (n / 2) as usize;
    let source = bso_presentation(n)?;
    let target = bo2_power_target(r)?;
    let ring = target.ring().clone();
    let (s, t) = (s_vars(&ring, r), t_vars(&ring, r));
    let images = (2..=n as usize)
        .map(|m| {
            let a = m / 2;
            if m % 2 == 0 {
                elementary_symmetric(&ring, a, &t)
            } else if n % 2 == 1 {
                beta_odd_image(&ring, &s, &t, a)
            } else {
                bilinear_odd_image(&ring, &s, &t, a)
            }
        })
        .collect();
    RestrictionHom::new(&format!("BSO({n}) -> BO(2)^{r}"), source, target, images, true)
}

/// Restriction from BO(2r) to `BO(2)^r`: `u_1 -> s_1 + ... + s_r`, `u_{2a} -> e_a(t)`,
/// `u_{2a+1} -> sum_m s_m sum_{I not containing m} t_I`.
pub fn restriction_bo2r_to_bo2r(r: usize) -> Result<RestrictionHom> {
    if r == 0 {
        return Err(Error::InvalidArgument("restriction_bo2r_to_bo2r needs r >= 1".into()));
    }
    let source = bo_presentation(2 * r as u32)?;
    let target = bo2_power_target(r)?;
    let ring = target.ring().clone();
    let (s, t) = (s_vars(&ring, r), t_vars(&ring, r));
    let images = (1..=2 * r)
        .map(|m| {
            if m % 2 == 0 {
                elementary_symmetric(&ring, m / 2, &t)
            } else {
                bilinear_odd_image(&ring, &s, &t, m / 2)
            }
        })
        .collect();
    RestrictionHom::new(&format!("BO({}) -> BO(2)^{r}", 2 * r), source, target, images, true)
}

/// Restriction from BSO(2r) to `H = (Z/2)^{r-1} x (mu_2)^r`, modulo the radical:
/// the BO(2r) formulas followed by `s_i -> x_i` (`i < r`), `s_r -> x_1 + ... + x_{r-1}`.
pub fn restriction_bso_even_to_h(r: usize) -> Result<RestrictionHom> {
    if r < 2 {
        return Err(Error::InvalidArgument("restriction_bso_even_to_h needs r >= 2".into()));
    }
    let mut gens: Vec<Generator> = (1..r).map(|i| Generator::hodge(&format!("x{i}"), 1, 0)).collect();
    gens.extend((1..=r).map(|i| Generator::hodge(&format!("t{i}"), 1, 1)));
    let target = GradedPresentation::new(&format!("BH/rad, r={r}"), gens, CoeffRing::F2)?;
    let bo = restriction_bo2r_to_bo2r(r)?;
    let tr = target.ring().clone();
    let mut proj: Vec<Poly> = (0..r - 1).map(|i| Poly::var(&tr, i)).collect();
    proj.push(sum(&tr, &proj.clone()));
    proj.extend((0..r).map(|i| Poly::var(&tr, r - 1 + i)));
    let proj = SubstHom::new(bo.target.ring(), &tr, proj.into_iter().map(Some).collect())?;
    let source = bso_presentation(2 * r as u32)?;
    let images = (2..=2 * r)
        .map(|m| proj.apply(bo.image_of(&format!("u{m}"))?))
        .collect::<Result<Vec<_>>>()?;
    RestrictionHom::new(&format!("BSO({}) -> BH", 2 * r), source, target, images, true)
}

/// `H*(BK)/rad = k[s, t_1..t_r]/(t_1 + ... + t_r)` with `t_r` eliminated.
pub fn k_target(r: usize) -> Result<GradedPresentation> {
    let mut gens = vec![Generator::hodge("s", 1, 0)];
    gens.extend((1..r).map(|i| Generator::hodge(&format!("t{i}"), 1, 1)));
    GradedPresentation::new(&format!("BK/rad, r={r}"), gens, CoeffRing::F2)
}

/// `s_i -> s`, `t_i -> t_i`, `t_r -> t_1 + ... + t_{r-1}`.
pub fn k_projection(r: usize) -> Result<SubstHom> {
    let src = bo2_power_target(r)?;
    let tgt = k_target(r)?;
    let tr = tgt.ring().clone();
    let s = Poly::var(&tr, 0);
    let mut images: Vec<Option<Poly>> = (0..r).map(|_| Some(s.clone())).collect();
    let ts: Vec<Poly> = (1..r).map(|i| Poly::var(&tr, i)).collect();
    images.extend(ts.iter().cloned().map(Some));
    images.push(Some(sum(&tr, &ts)));
    SubstHom::new(src.ring(), &tr, images)
}

/// Restriction from BSO(2r+1) to `K = (mu_2)^{r-1} x Z/2` modulo the radical:
/// `u_{2a} -> e_a(t)` and `u_{2a+1} -> a s e_a(t)`.
pub fn restriction_to_k(n: u32) -> Result<RestrictionHom> {
    if n.is_multiple_of(2) || n < 7 {
        return Err(Error::InvalidArgument(format!("restriction_to_k needs odd n >= 7, got {n}")));
    }
    let r = (n / 2) as usize;
    let source = bso_presentation(n)?;
    let target = k_target(r)?;
    let tr = target.ring().clone();
    let s = Poly::var(&tr, 0);
    let mut t: Vec<Poly> = (1..r).map(|i| Poly::var(&tr, i)).collect();
    t.push(sum(&tr, &t.clone()));
    let images = (2..=n as usize)
        .map(|m| {
            let a = m / 2;
            let e = elementary_symmetric(&tr, a, &t);
            if m % 2 == 0 {
                e
            } else if a % 2 == 1 {
                &s * &e
            } else {
                Poly::zero(&tr)
            }
        })
        .collect();
    RestrictionHom::new(&format!("BSO({n}) -> BK"), source, target, images, true)
}

/// The Bockstein on `k[s_1..s_r, t_1..t_r]`: the derivation with
/// `beta(s_i) = s_i^2`, `beta(t_i) = s_i t_i`.
#[derive(Clone, Debug)]
pub struct Bockstein {
    ring: Ring,
    values: Vec<Poly>,
}

impl Bockstein {
    pub fn new(r: usize) -> Result<Bockstein> {
        let ring = bo2_power_target(r)?.ring().clone();
        let (s, t) = (s_vars(&ring, r), t_vars(&ring, r));
        let mut values: Vec<Poly> = s.iter().map(|x| x * x).collect();
        values.extend(s.iter().zip(&t).map(|(a, b)| a * b));
        Ok(Bockstein { ring, values })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        PolyRing::check_same(f.ring(), &self.ring)?;
        let mut out = Poly::zero(&self.ring);
        for (v, bv) in self.values.iter().enumerate() {
            let d = f.derivative(v)?;
            if !d.is_zero() {
                out = &out + &(&d * bv);
            }
        }
        Ok(out)
    }
}

pub fn bockstein(r: usize) -> Result<Bockstein> {
    Bockstein::new(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum JacobianVariant {
    O,
    SO,
}

impl std::str::FromStr for JacobianVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<JacobianVariant> {
        match s.to_ascii_uppercase().as_str() {
            "O" => Ok(JacobianVariant::O),
            "SO" => Ok(JacobianVariant::SO),
            _ => Err(Error::InvalidArgument(format!("unknown Jacobian variant '{s}' (use O or SO)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianReport {
    pub r: usize,
    pub variant: JacobianVariant,
    pub matrix: Vec<Vec<String>>,
    pub determinant: String,
    pub expected: String,
    /// SO only: the factors `t_j + t_r` pulled out of the rows, and the
    /// remaining `(r-1)`-determinant with its expected Vandermonde value.
    pub row_factors: Vec<String>,
    pub reduced_determinant: Option<String>,
    pub reduced_expected: Option<String>,
    /// O only: the same matrix over the integers has determinant
    /// `+- prod_{i<j} (t_i - t_j)`.
    pub integer_vandermonde: Option<bool>,
    pub difference: String,
    pub pass: bool,
}

/// `prod_{i<j} (t_i - t_j)` over the given elements.
fn vandermonde(ring: &Ring, t: &[Poly]) -> Poly {
    let mut factors = Vec::new();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            factors.push(&t[i] - &t[j]);
        }
    }
    product(ring, &factors)
}

fn stringify(m: &[Vec<Poly>]) -> Vec<Vec<String>> {
    m.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect()
}

/// Matrix `(j, a) -> e_{a-1}(t_i : i != j)` over the integers, and whether
/// its determinant is plus or minus the Vandermonde determinant.
fn integer_vandermonde_check(r: usize) -> Result<bool> {
    let ring = PolyRing::indexed("t", 1, r, CoeffRing::Integers)?;
    let t: Vec<Poly> = (0..r).map(|i| Poly::var(&ring, i)).collect();
    let m: Vec<Vec<Poly>> = (0..r)
        .map(|j| {
            let others: Vec<Poly> = t.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, p)| p.clone()).collect();
            (1..=r).map(|a| elementary_symmetric(&ring, a - 1, &others)).collect()
        })
        .collect();
    let d = determinant(&m)?;
    let v = vandermonde(&ring, &t);
    Ok(d == v || d == -&v)
}

/// Jacobian of the odd-class images with respect to the degree-1 variables:
/// for O, `u_1, u_3, ..., u_{2r-1}` against `s_1..s_r` (determinant
/// `prod_{i<j} (t_i + t_j)`); for SO, `u_3, ..., u_{2r-1}` against
/// `x_1..x_{r-1}` (rows divisible by `t_j + t_r`, leaving a Vandermonde
/// determinant in `t_1..t_{r-1}`).
pub fn jacobian_certificate(r: usize, variant: JacobianVariant) -> Result<JacobianReport> {
    if !(2..=6).contains(&r) {
        return Err(Error::InvalidArgument(format!("jacobian_certificate takes 2 <= r <= 6, got {r}")));
    }
    match variant {
        JacobianVariant::O => {
            let res = restriction_bo2r_to_bo2r(r)?;
            let ring = res.target.ring().clone();
            let t = t_vars(&ring, r);
            let mut m = Vec::new();
            for j in 0..r {
                let mut row = Vec::new();
                for a in 1..=r {
                    row.push(res.image_of(&format!("u{}", 2 * a - 1))?.derivative(j)?);
                }
                m.push(row);
            }
            let det = determinant(&m)?;
            let expected = vandermonde(&ring, &t);
            let diff = &det - &expected;
            let integer = integer_vandermonde_check(r)?;
            Ok(JacobianReport {
                r,
                variant,
                matrix: stringify(&m),
                determinant: det.to_string(),
                expected: expected.to_string(),
                row_factors: vec![],
                reduced_determinant: None,
                reduced_expected: None,
                integer_vandermonde: Some(integer),
                difference: diff.to_string(),
                pass: diff.is_zero() && integer,
            })
        }
        JacobianVariant::SO => {
            let res = restriction_bso_even_to_h(r)?;
            let ring = res.target.ring().clone();
            let t: Vec<Poly> = (0..r).map(|i| Poly::var(&ring, r - 1 + i)).collect();
            let mut m = Vec::new();
            for j in 0..r - 1 {
                let mut row = Vec::new();
                for a in 1..r {
                    row.push(res.image_of(&format!("u{}", 2 * a + 1))?.derivative(j)?);
                }
                m.push(row);
            }
            let factors: Vec<Poly> = (0..r - 1).map(|j| &t[j] + &t[r - 1]).collect();
            let mut reduced = Vec::new();
            let mut divisible = true;
            for (row, f) in m.iter().zip(&factors) {
                let mut out = Vec::new();
                for e in row {
                    match e.div_exact(f)? {
                        Some(q) => out.push(q),
                        None => {
                            divisible = false;
                            out.push(Poly::zero(&ring));
                        }
                    }
                }
                reduced.push(out);
            }
            let det = determinant(&m)?;
            let det_e = determinant(&reduced)?;
            let expected_e = vandermonde(&ring, &t[..r - 1]);
            let expected = &product(&ring, &factors) * &expected_e;
            let diff = &det - &expected;
            let pass = divisible && diff.is_zero() && det_e == expected_e;
            Ok(JacobianReport {
                r,
                variant,
                matrix: stringify(&m),
                determinant: det.to_string(),
                expected: expected.to_string(),
                row_factors: factors.iter().map(|f| f.to_string()).collect(),
                reduced_determinant: Some(det_e.to_string()),
                reduced_expected: Some(expected_e.to_string()),
                integer_vandermonde: None,
                difference: diff.to_string(),
                pass,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restriction_examples() {
        let res = restriction_bso_to_bo2r(7).unwrap();
        assert_eq!(res.image_of("u2").unwrap().to_string(), "t1 + t2 + t3");
        assert_eq!(res.image_of("u4").unwrap().to_string(), "t1*t2 + t1*t3 + t2*t3");
        let even = restriction_bso_to_bo2r(6).unwrap();
        let want = "s1*(t2 + t3) + s2*(t1 + t3) + s3*(t1 + t2)";
        assert_eq!(even.image_of("u3").unwrap(), &Poly::parse(even.target.ring(), want).unwrap());
        let bo = restriction_bo2r_to_bo2r(3).unwrap();
        assert_eq!(bo.image_of("u1").unwrap().to_string(), "s1 + s2 + s3");
    }

    #[test]
    fn restriction_to_k_values() {
        let k = restriction_to_k(11).unwrap();
        assert!(k.image_of("u2").unwrap().is_zero());
        assert!(k.image_of("u5").unwrap().is_zero());
        let s = Poly::var(k.target.ring(), 0);
        assert_eq!(k.image_of("u7").unwrap(), &(&s * k.image_of("u6").unwrap()));
    }

    #[test]
    fn restriction_to_k_factors_through_bo2r() {
        for n in [7, 9, 11, 13] {
            let direct = restriction_to_k(n).unwrap();
            let via = restriction_bso_to_bo2r(n).unwrap().hom.then(&k_projection((n / 2) as usize).unwrap()).unwrap();
            assert_eq!(direct.hom.images(), via.images(), "n={n}");
        }
    }

    #[test]
    fn bockstein_examples() {
        let b = bockstein(3).unwrap();
        let t1 = Poly::var_named(b.ring(), "t1").unwrap();
        assert_eq!(b.apply(&t1).unwrap().to_string(), "s1*t1");
        assert!(b.apply(&Poly::one(b.ring())).unwrap().is_zero());
    }

    #[test]
    fn jacobians() {
        let o2 = jacobian_certificate(2, JacobianVariant::O).unwrap();
        assert_eq!(o2.matrix, vec![vec!["1", "t2"], vec!["1", "t1"]]);
        assert_eq!(o2.determinant, "t1 + t2");
        let o3 = jacobian_certificate(3, JacobianVariant::O).unwrap();
        assert_eq!(o3.matrix[0], ["1", "t2 + t3", "t2*t3"]);
        assert!(o3.pass);
        let so3 = jacobian_certificate(3, JacobianVariant::SO).unwrap();
        assert_eq!(so3.row_factors, ["t1 + t3", "t2 + t3"]);
        assert_eq!(so3.matrix[0][0], "t1 + t3");
        assert!(so3.pass, "{so3:?}");
    }
}
