//! Ring homomorphisms given by substituting polynomials for variables.

use rustc_hash::FxHashMap;

use super::poly::Poly;
use super::ring::{PolyRing, Ring};
use crate::error::{Error, Result};

/// A substitution homomorphism `source -> target`, sending variable `i` of the
/// source ring to `images[i]`. Variables without an image may not occur in
/// polynomials the homomorphism is applied to.
#[derive(Clone, Debug, PartialEq)]
pub struct SubstHom {
    source: Ring,
    target: Ring,
    images: Vec<Option<Poly>>,
}

impl SubstHom {
    pub fn new(source: &Ring, target: &Ring, images: Vec<Option<Poly>>) -> Result<SubstHom> {
        if images.len() != source.nvars() {
            return Err(Error::InvalidArgument(format!(
                "{} images for {} source variables",
                images.len(),
                source.nvars()
            )));
        }
        for img in images.iter().flatten() {
            PolyRing::check_same(img.ring(), target)?;
        }
        Ok(SubstHom { source: source.clone(), target: target.clone(), images })
    }

    /// Builds a homomorphism from `(source variable name, image)` pairs.
    pub fn from_named(source: &Ring, target: &Ring, pairs: &[(&str, Poly)]) -> Result<SubstHom> {
        let mut images = vec![None; source.nvars()];
        for (name, img) in pairs {
            images[source.require_index(name)?] = Some(img.clone());
        }
        SubstHom::new(source, target, images)
    }

    /// Images given as text in the target ring; one entry per source variable.
    pub fn from_text(source: &Ring, target: &Ring, pairs: &[(&str, &str)]) -> Result<SubstHom> {
        let parsed = pairs
            .iter()
            .map(|(n, t)| Ok((*n, Poly::parse(target, t)?)))
            .collect::<Result<Vec<_>>>()?;
        SubstHom::from_named(source, target, &parsed)
    }

    pub fn identity(ring: &Ring) -> SubstHom {
        let images = (0..ring.nvars()).map(|i| Some(Poly::var(ring, i))).collect();
        SubstHom { source: ring.clone(), target: ring.clone(), images }
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn image(&self, var: usize) -> Option<&Poly> {
        self.images[var].as_ref()
    }

    pub fn images(&self) -> &[Option<Poly>] {
        &self.images
    }

    /// Evaluates the homomorphism on `f`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        PolyRing::check_same(f.ring(), &self.source)?;
        let cr = self.target.coeff_ring();
        let mut powers: FxHashMap<(usize, u32), Poly> = FxHashMap::default();
        let mut out = Poly::zero(&self.target);
        for (m, c) in f.terms() {
            let mut term = Poly::term(&self.target, self.target.unit_monomial(), cr.coerce(c)?);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = self.images[v]
                    .as_ref()
                    .ok_or_else(|| Error::MissingImage(self.source.name(v).to_string()))?;
                let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                term = &term * pw;
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms() {
                out.add_term(tm.clone(), tc);
            }
        }
        Ok(out)
    }

    /// `other ∘ self`: first apply `self`, then `other`.
    pub fn then(&self, other: &SubstHom) -> Result<SubstHom> {
        PolyRing::check_same(&self.target, &other.source)?;
        let images = self
            .images
            .iter()
            .map(|img| img.as_ref().map(|p| other.apply(p)).transpose())
            .collect::<Result<Vec<_>>>()?;
        Ok(SubstHom { source: self.source.clone(), target: other.target.clone(), images })
    }

    /// True when every image is homogeneous of the same weighted degree as its
    /// variable (zero images allowed), so the map preserves the grading.
    pub fn is_degree_preserving(&self) -> bool {
        self.images.iter().enumerate().all(|(v, img)| match img {
            None => true,
            Some(p) => p.is_homogeneous() && p.degree().is_none_or(|d| d == self.source.weight(v)),
        })
    }

    /// True when the homomorphism maps each variable to a scalar multiple of
    /// a single variable, so it permutes monomials up to scalars.
    pub fn is_monomial_map(&self) -> bool {
        self.images.iter().all(|img| match img {
            Some(p) => p.num_terms() == 1 && p.terms().next().is_some_and(|(m, _)| m.total_exponent() == 1),
            None => false,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::CoeffRing;

    #[test]
    fn shift_fixes_x_times_x_plus_a() {
        let r = PolyRing::standard(&["a", "x"], CoeffRing::F2).unwrap();
        let h = SubstHom::from_text(&r, &r, &[("a", "a"), ("x", "x + a")]).unwrap();
        let u = Poly::parse(&r, "x*(x + a)").unwrap();
        assert_eq!(h.apply(&u).unwrap(), u);
        let x = Poly::parse(&r, "x").unwrap();
        assert_eq!(&h.apply(&x).unwrap() - &x, Poly::parse(&r, "a").unwrap());
    }

    #[test]
    fn identity_is_identity() {
        let r = PolyRing::indexed("x", 1, 3, CoeffRing::Fp(5)).unwrap();
        let f = Poly::parse(&r, "3*x1^2*x3 + x2 + 4").unwrap();
        assert_eq!(SubstHom::identity(&r).apply(&f).unwrap(), f);
    }

    #[test]
    fn restriction_to_elementary_symmetric() {
        let src = PolyRing::new(&["u4"], &[4], CoeffRing::F2).unwrap();
        let tgt = PolyRing::new(&["t1", "t2", "t3"], &[2, 2, 2], CoeffRing::F2).unwrap();
        let h = SubstHom::from_text(&src, &tgt, &[("u4", "t1*t2 + t1*t3 + t2*t3")]).unwrap();
        assert!(h.is_degree_preserving());
        let img = h.apply(&Poly::parse(&src, "u4").unwrap()).unwrap();
        assert_eq!(img.to_string(), "t1*t2 + t1*t3 + t2*t3");
    }

    #[test]
    fn missing_image_names_variable() {
        let r = PolyRing::standard(&["a", "b"], CoeffRing::F2).unwrap();
        let h = SubstHom::from_text(&r, &r, &[("a", "b")]).unwrap();
        let err = h.apply(&Poly::parse(&r, "a + b").unwrap()).unwrap_err();
        assert_eq!(err, Error::MissingImage("b".into()));
        assert!(h.apply(&Poly::parse(&r, "a^2").unwrap()).is_ok());
    }

    #[test]
    fn composition() {
        let r = PolyRing::standard(&["a", "x"], CoeffRing::F2).unwrap();
        let h = SubstHom::from_text(&r, &r, &[("a", "a"), ("x", "x + a")]).unwrap();
        let hh = h.then(&h).unwrap();
        assert_eq!(hh, SubstHom::identity(&r));
        assert!(!h.is_monomial_map());
    }
}
