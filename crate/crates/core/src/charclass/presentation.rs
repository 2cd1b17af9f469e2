//! Graded presentations of cohomology rings of classifying stacks.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{
    coordinates, graded_component_basis_bounded, index_basis, CoeffRing, Monomial, Poly, PolyRing, Ring,
    SparseRows, DEFAULT_MONOMIAL_GUARD,
};
use crate::groupdata::Series;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    /// `(i, j)` for a class in `H^i(-, Omega^j)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bidegree: Option<(u32, u32)>,
    /// Exterior generator: its square is zero.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub square_zero: bool,
}

impl Generator {
    pub fn new(name: &str, degree: u32) -> Generator {
        Generator { name: name.to_string(), degree, bidegree: None, square_zero: false }
    }

    pub fn hodge(name: &str, i: u32, j: u32) -> Generator {
        Generator { name: name.to_string(), degree: i + j, bidegree: Some((i, j)), square_zero: false }
    }

    pub fn exterior(mut self) -> Generator {
        self.square_zero = true;
        self
    }
}

/// Generators with degrees, homogeneous relations in them, and exterior
/// flags. Relations live in [`GradedPresentation::ring`].
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub label: String,
    generators: Vec<Generator>,
    ring: Ring,
    relations: Vec<Poly>,
    complete_intersection: bool,
    /// Generator renamings made by [`kunneth`] to avoid collisions.
    pub renamed: Vec<(String, String)>,
}

impl PartialEq for GradedPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
            && self.relations.iter().map(|p| p.to_string()).collect::<Vec<_>>()
                == other.relations.iter().map(|p| p.to_string()).collect::<Vec<_>>()
    }
}

/// JSON form of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub label: String,
    pub generators: Vec<Generator>,
    pub relations: Vec<String>,
}

impl GradedPresentation {
    pub fn new(label: &str, generators: Vec<Generator>, coeffs: CoeffRing) -> Result<GradedPresentation> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.name.clone()) {
                return Err(Error::InvalidArgument(format!("generator {} appears twice", g.name)));
            }
            if g.degree == 0 {
                return Err(Error::InvalidArgument(format!("generator {} has degree 0", g.name)));
            }
            if let Some((i, j)) = g.bidegree {
                if i + j != g.degree {
                    return Err(Error::InvalidArgument(format!("bidegree of {} does not add up", g.name)));
                }
            }
        }
        let names: Vec<&str> = generators.iter().map(|g| g.name.as_str()).collect();
        let weights: Vec<u32> = generators.iter().map(|g| g.degree).collect();
        let ring = PolyRing::new(&names, &weights, coeffs)?;
        Ok(GradedPresentation {
            label: label.to_string(),
            generators,
            ring,
            relations: Vec::new(),
            complete_intersection: true,
            renamed: Vec::new(),
        })
    }

    /// Adds homogeneous relations; `complete_intersection` asserts that they
    /// form a regular sequence.
    pub fn with_relations(mut self, relations: Vec<Poly>, complete_intersection: bool) -> Result<GradedPresentation> {
        for r in &relations {
            PolyRing::check_same(r.ring(), &self.ring)?;
            if !r.is_homogeneous() {
                return Err(Error::NotHomogeneous(r.to_string()));
            }
        }
        self.relations.extend(relations);
        self.complete_intersection &= complete_intersection;
        Ok(self)
    }

    /// Relations given as text in the generator names.
    pub fn with_relation_text(self, relations: &[&str], complete_intersection: bool) -> Result<GradedPresentation> {
        let polys = relations.iter().map(|t| Poly::parse(&self.ring, t)).collect::<Result<Vec<_>>>()?;
        self.with_relations(polys, complete_intersection)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn is_complete_intersection(&self) -> bool {
        self.complete_intersection
    }

    pub fn generator(&self, name: &str) -> Result<Poly> {
        Poly::var_named(&self.ring, name)
    }

    /// Renames generators; unknown names are an error.
    pub fn renamed(&self, pairs: &[(&str, &str)]) -> Result<GradedPresentation> {
        let mut gens = self.generators.clone();
        for (old, new) in pairs {
            let g = gens
                .iter_mut()
                .find(|g| g.name == *old)
                .ok_or_else(|| Error::UnknownVariable(old.to_string()))?;
            g.name = new.to_string();
        }
        let mut out = GradedPresentation::new(&self.label, gens, self.ring.coeff_ring())?;
        out.relations = self.relations.iter().map(|r| transport(r, &out.ring)).collect();
        out.complete_intersection = self.complete_intersection;
        out.renamed = self.renamed.clone();
        Ok(out)
    }

    /// Exponent caps: 1 for exterior generators.
    fn caps(&self) -> Vec<Option<u32>> {
        self.generators.iter().map(|g| g.square_zero.then_some(1)).collect()
    }

    /// Monomials of degree `d` that survive the exterior relations.
    pub fn monomial_basis(&self, d: u32) -> Vec<Monomial> {
        graded_component_basis_bounded(&self.ring, d, None, &self.caps())
    }

    /// Hilbert series. Requires the explicit relations to be a regular sequence.
    pub fn series(&self) -> Result<Series> {
        if !self.complete_intersection {
            return Err(Error::Unsupported(format!(
                "{}: relations are not certified regular; use dim_degree",
                self.label
            )));
        }
        let mut poly_degrees = Vec::new();
        let mut s = Series::one();
        for g in &self.generators {
            if g.square_zero {
                s = s.mul(&Series::exterior(g.degree));
            } else {
                poly_degrees.push(g.degree);
            }
        }
        let mut rel_degrees = Vec::new();
        for r in &self.relations {
            rel_degrees.push(
                r.homogeneous_degree()?
                    .ok_or_else(|| Error::InvalidArgument("zero relation in a complete intersection".into()))?,
            );
        }
        Ok(s.mul(&Series::complete_intersection(&poly_degrees, &rel_degrees)))
    }

    /// True when every generator with a bidegree has total degree `i + j`,
    /// so that Hodge and de Rham gradings agree.
    pub fn bidegrees_consistent(&self) -> bool {
        self.generators.iter().all(|g| g.bidegree.is_none_or(|(i, j)| i + j == g.degree))
    }

    /// Reduces a polynomial in the generators by the exterior relations.
    pub fn reduce_exterior(&self, f: &Poly) -> Poly {
        let caps = self.caps();
        Poly::from_terms(
            &self.ring,
            f.terms()
                .filter(|(m, _)| caps.iter().enumerate().all(|(v, c)| c.is_none_or(|c| m.exponent(v) <= c)))
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            label: self.label.clone(),
            generators: self.generators.clone(),
            relations: self.relations.iter().map(|r| r.to_string()).collect(),
        }
    }

    pub fn from_json(j: &PresentationJson, coeffs: CoeffRing, complete_intersection: bool) -> Result<GradedPresentation> {
        let p = GradedPresentation::new(&j.label, j.generators.clone(), coeffs)?;
        let rels: Vec<&str> = j.relations.iter().map(|s| s.as_str()).collect();
        p.with_relation_text(&rels, complete_intersection)
    }
}

/// Copies a polynomial to a ring with the same variables in the same order.
fn transport(f: &Poly, ring: &Ring) -> Poly {
    Poly::from_terms(
        ring,
        f.terms().map(|(m, c)| (ring.monomial(m.exponents()), c.clone())),
    )
}

/// Exact dimension of the degree-`d` part, by linear algebra: monomials of
/// degree `d` modulo the span of (relation) x (monomial) products.
pub fn dim_degree(p: &GradedPresentation, d: u32) -> Result<usize> {
    dim_degree_guarded(p, d, DEFAULT_MONOMIAL_GUARD)
}

pub fn dim_degree_guarded(p: &GradedPresentation, d: u32, guard: usize) -> Result<usize> {
    let basis = p.monomial_basis(d);
    if basis.len() > guard {
        return Err(Error::GuardExceeded { count: basis.len(), limit: guard });
    }
    if basis.is_empty() {
        return Ok(0);
    }
    let modulus = p.ring.coeff_ring().characteristic();
    if modulus == 0 {
        return Err(Error::Unsupported("dim_degree needs a prime field".into()));
    }
    let index = index_basis(&basis);
    let mut rows = SparseRows::new(modulus, basis.len());
    for r in &p.relations {
        let e = match r.homogeneous_degree()? {
            Some(e) if e <= d => e,
            _ => continue,
        };
        for m in p.monomial_basis(d - e) {
            let prod = p.reduce_exterior(&r.mul_term(&m, &p.ring.coeff_ring().one()));
            rows.push(coordinates(&prod, &index)?);
            if rows.rows.len() > 4 * guard {
                return Err(Error::GuardExceeded { count: rows.rows.len(), limit: 4 * guard });
            }
        }
    }
    Ok(basis.len() - rows.rank()?)
}

/// `H*(BSO(n))`: `k[u_2, ..., u_n]` with `u_{2a}` in bidegree `(a, a)` and
/// `u_{2a+1}` in bidegree `(a + 1, a)`.
pub fn bso_presentation(n: u32) -> Result<GradedPresentation> {
    if n < 2 {
        return Err(Error::InvalidArgument("bso_presentation needs n >= 2".into()));
    }
    let gens = (2..=n).map(u_generator).collect();
    GradedPresentation::new(&format!("BSO({n})"), gens, CoeffRing::F2)
}

fn u_generator(m: u32) -> Generator {
    let a = m / 2;
    if m.is_multiple_of(2) {
        Generator::hodge(&format!("u{m}"), a, a)
    } else {
        Generator::hodge(&format!("u{m}"), a + 1, a)
    }
}

/// `H*(BO(n))`: `k[u_1, ..., u_{2r}]` for `n = 2r`, and
/// `k[v_1, c_1, u_2, ..., u_{2r+1}]/(v_1^2)` for `n = 2r + 1`.
pub fn bo_presentation(n: u32) -> Result<GradedPresentation> {
    if n < 1 {
        return Err(Error::InvalidArgument("bo_presentation needs n >= 1".into()));
    }
    let label = format!("BO({n})");
    if n.is_multiple_of(2) {
        GradedPresentation::new(&label, (1..=n).map(u_generator).collect(), CoeffRing::F2)
    } else {
        let mut gens = vec![Generator::hodge("v1", 0, 1).exterior(), Generator::hodge("c1", 1, 1)];
        gens.extend((2..=n).map(u_generator));
        GradedPresentation::new(&label, gens, CoeffRing::F2)
    }
}

/// `H*(B mu_p) = k[c_1]<v_1>` over `F_p`, `|v_1| = 1`, `|c_1| = 2`.
pub fn bmu_p_presentation(p: u64) -> Result<GradedPresentation> {
    let gens = vec![Generator::hodge("c1", 1, 1), Generator::hodge("v1", 0, 1).exterior()];
    GradedPresentation::new(&format!("Bmu_{p}"), gens, CoeffRing::prime(p)?)
}

/// `H*(B Z/2) = k[s]`, `|s| = 1`.
pub fn bz2_presentation() -> Result<GradedPresentation> {
    GradedPresentation::new("BZ/2", vec![Generator::hodge("s", 1, 0)], CoeffRing::F2)
}

/// The point: `k` itself.
pub fn point_presentation(coeffs: CoeffRing) -> Result<GradedPresentation> {
    GradedPresentation::new("pt", vec![], coeffs)
}

/// Tensor product of presentations. Colliding generator names in `b` get a
/// numeric suffix, recorded in `renamed`.
pub fn kunneth(a: &GradedPresentation, b: &GradedPresentation) -> Result<GradedPresentation> {
    if a.ring.coeff_ring() != b.ring.coeff_ring() {
        return Err(Error::RingMismatch { left: a.ring.to_string(), right: b.ring.to_string() });
    }
    let mut used: BTreeSet<String> = a.generators.iter().map(|g| g.name.clone()).collect();
    let mut renamed = a.renamed.clone();
    let mut gens = a.generators.clone();
    for g in &b.generators {
        let mut g2 = g.clone();
        if used.contains(&g.name) {
            let mut k = 2;
            while used.contains(&format!("{}_{k}", g.name)) || b.generators.iter().any(|h| h.name == format!("{}_{k}", g.name)) {
                k += 1;
            }
            g2.name = format!("{}_{k}", g.name);
            renamed.push((g.name.clone(), g2.name.clone()));
        }
        used.insert(g2.name.clone());
        gens.push(g2);
    }
    let label = if b.generators.is_empty() {
        a.label.clone()
    } else if a.generators.is_empty() {
        b.label.clone()
    } else {
        format!("{} x {}", a.label, b.label)
    };
    let mut out = GradedPresentation::new(&label, gens, a.ring.coeff_ring())?;
    let na = a.generators.len();
    let ring = out.ring.clone();
    let shift = |f: &Poly, offset: usize| -> Poly {
        Poly::from_terms(
            &ring,
            f.terms().map(|(m, c)| {
                let mut e = vec![0u32; ring.nvars()];
                e[offset..offset + m.exponents().len()].copy_from_slice(m.exponents());
                (ring.monomial(&e), c.clone())
            }),
        )
    };
    let mut rels: Vec<Poly> = a.relations.iter().map(|r| shift(r, 0)).collect();
    rels.extend(b.relations.iter().map(|r| shift(r, na)));
    out.relations = rels;
    out.complete_intersection = a.complete_intersection && b.complete_intersection;
    out.renamed = renamed;
    Ok(out)
}

/// Chow ring of the maximal isotropic Grassmannian of SO(n) over `F_p`:
/// `k[e_1..e_s]/(e_i^2 - 2 e_{i-1} e_{i+1} + ... + (-1)^i e_{2i})`, with
/// `e_j = 0` for `j > s`, `s = floor((n - 1)/2)`.
/// Graded by codimension, `|e_i| = i`.
pub fn isotropic_grassmannian_chow(n: u32, p: u64) -> Result<GradedPresentation> {
    grassmannian(n, p, false)
}

fn grassmannian(n: u32, p: u64, hodge: bool) -> Result<GradedPresentation> {
    if n < 2 {
        return Err(Error::InvalidArgument("the isotropic Grassmannian needs n >= 2".into()));
    }
    let s = (n - 1) / 2;
    let gens = (1..=s)
        .map(|i| if hodge { Generator::hodge(&format!("e{i}"), i, i) } else { Generator::new(&format!("e{i}"), i) })
        .collect();
    let pres = GradedPresentation::new(&format!("OG(SO({n}))"), gens, CoeffRing::prime(p)?)?;
    let ring = pres.ring.clone();
    let e = |j: u32| -> Poly {
        match j {
            0 => Poly::one(&ring),
            j if j > s => Poly::zero(&ring),
            j => Poly::var(&ring, (j - 1) as usize),
        }
    };
    let mut rels = Vec::new();
    for i in 1..=s {
        let mut r = &e(i) * &e(i);
        for k in 1..i {
            let t = (&e(i - k) * &e(i + k)).scale(&ring.coeff_ring().from_i64(2));
            r = if k % 2 == 1 { &r - &t } else { &r + &t };
        }
        let last = e(2 * i);
        r = if i % 2 == 1 { &r - &last } else { &r + &last };
        rels.push(r);
    }
    pres.with_relations(rels, true)
}

/// Hodge cohomology of the same Grassmannian: `e_i` in bidegree `(i, i)`
/// with `e_i^2 = e_{2i}`.
pub fn isotropic_grassmannian_hodge(n: u32) -> Result<GradedPresentation> {
    let mut out = grassmannian(n, 2, true)?;
    out.label = format!("H_Hodge(OG(SO({n})))");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bso_generators() {
        let p = bso_presentation(3).unwrap();
        let names: Vec<_> = p.generators().iter().map(|g| (g.name.as_str(), g.degree)).collect();
        assert_eq!(names, [("u2", 2), ("u3", 3)]);
        assert_eq!(bso_presentation(11).unwrap().generators().len(), 10);
        assert_eq!(p.series().unwrap().coefficient(0), 1);
        assert!(p.bidegrees_consistent());
        assert_eq!(p.generators()[1].bidegree, Some((2, 1)));
    }

    #[test]
    fn bo_odd_is_bso_times_bmu2() {
        let a = bo_presentation(3).unwrap().series().unwrap();
        let b = bso_presentation(3).unwrap().series().unwrap().mul(&bmu_p_presentation(2).unwrap().series().unwrap());
        assert_eq!(a.coefficients(20), b.coefficients(20));
        let o1 = bo_presentation(1).unwrap();
        assert_eq!(o1.generators().len(), 2);
        assert!(o1.generators()[0].square_zero);
        let o2 = bo_presentation(2).unwrap();
        assert_eq!(o2.generators().iter().map(|g| g.name.as_str()).collect::<Vec<_>>(), ["u1", "u2"]);
    }

    #[test]
    fn bmu_is_one_in_every_degree() {
        let p = bmu_p_presentation(2).unwrap();
        assert_eq!(p.series().unwrap().coefficients(4), vec![1; 5]);
        for d in 0..8 {
            assert_eq!(dim_degree(&p, d).unwrap(), 1);
        }
        let v = p.generator("v1").unwrap();
        assert!(p.reduce_exterior(&(&v * &v)).is_zero());
        assert_eq!(bz2_presentation().unwrap().series().unwrap(), Series::polynomial_ring(&[1]));
    }

    #[test]
    fn kunneth_names() {
        let bh = kunneth(&bz2_presentation().unwrap(), &bmu_p_presentation(2).unwrap().renamed(&[("c1", "t"), ("v1", "v")]).unwrap()).unwrap();
        let names: Vec<_> = bh.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["s", "t", "v"]);
        let twice = kunneth(&bz2_presentation().unwrap(), &bz2_presentation().unwrap()).unwrap();
        assert_eq!(twice.renamed, vec![("s".to_string(), "s_2".to_string())]);
        let pt = point_presentation(CoeffRing::F2).unwrap();
        assert_eq!(kunneth(&bh, &pt).unwrap(), bh);
    }

    #[test]
    fn single_relation_dimension() {
        let p = GradedPresentation::new(
            "lower",
            [4, 6, 7, 8, 10, 11].iter().map(|&d| Generator::new(&format!("u{d}"), d)).collect(),
            CoeffRing::F2,
        )
        .unwrap()
        .with_relation_text(&["u11*u6 + u10*u7"], true)
        .unwrap();
        let free = crate::exactalg::count_monomials(&[4, 6, 7, 8, 10, 11], 17) as usize;
        assert_eq!(dim_degree(&p, 17).unwrap(), free - 1);
        for d in 0..=40 {
            assert_eq!(dim_degree(&p, d).unwrap() as i128, p.series().unwrap().coefficient(d as usize), "d={d}");
        }
    }

    #[test]
    fn grassmannian_chow_ring_has_exterior_size() {
        for n in [5, 7, 9, 11, 12] {
            for p in [2, 3, 5] {
                let g = isotropic_grassmannian_chow(n, p).unwrap();
                let s = crate::groupdata::isotropic_grassmannian_poincare(n).unwrap();
                let top = s.to_polynomial().unwrap().len() as u32 + 2;
                for d in 0..top {
                    assert_eq!(dim_degree(&g, d).unwrap() as i128, s.coefficient(d as usize), "n={n} p={p} d={d}");
                }
            }
        }
    }

    #[test]
    fn mod_two_chow_relations_are_squares() {
        let g = isotropic_grassmannian_chow(11, 2).unwrap();
        let rels: Vec<String> = g.relations().iter().map(|r| r.to_string()).collect();
        assert_eq!(rels, ["e1^2 + e2", "e2^2 + e4", "e3^2", "e4^2", "e5^2"]);
    }
}
