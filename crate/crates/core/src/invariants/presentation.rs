//! Claimed presentations of invariant rings and their degreewise verification.

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::action::{eta, mu, spin_action, symmetric_quotient_action, ActionGenerator, ActionKind, WeylAction};
use super::brute::brute_invariant_dimension;
use crate::error::{Error, Result};
use crate::exactalg::{
    coordinates, graded_component_basis, index_basis, CoeffRing, Monomial, Poly, PolyRing, Ring, SparseRows,
    SubstHom,
};
use crate::groupdata::Series;

/// A candidate ring of invariants: named generators with degrees, their
/// values in the acted-on ring, and relations among them.
#[derive(Clone, Debug)]
pub struct ClaimedPresentation {
    pub label: String,
    names: Vec<String>,
    degrees: Vec<u32>,
    values: Vec<Poly>,
    relations: Vec<Poly>,
    complete_intersection: bool,
}

impl ClaimedPresentation {
    /// A polynomial ring on the given generator values.
    pub fn polynomial(label: &str, gens: Vec<(String, Poly)>) -> Result<ClaimedPresentation> {
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        let mut values = Vec::new();
        for (name, value) in gens {
            let d = value
                .homogeneous_degree()?
                .ok_or_else(|| Error::InvalidArgument(format!("generator {name} is zero")))?;
            if d == 0 {
                return Err(Error::InvalidArgument(format!("generator {name} has degree 0")));
            }
            names.push(name);
            degrees.push(d);
            values.push(value);
        }
        if let Some(first) = values.first() {
            for v in &values {
                PolyRing::check_same(first.ring(), v.ring())?;
            }
        }
        Ok(ClaimedPresentation {
            label: label.to_string(),
            names,
            degrees,
            values,
            relations: Vec::new(),
            complete_intersection: false,
        })
    }

    /// Adds relations (polynomials in [`ClaimedPresentation::generator_ring`]).
    /// `complete_intersection` asserts they form a regular sequence, which is
    /// what licenses the closed-form series.
    pub fn with_relations(mut self, relations: Vec<Poly>, complete_intersection: bool) -> ClaimedPresentation {
        self.relations = relations;
        self.complete_intersection = complete_intersection;
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn values(&self) -> &[Poly] {
        &self.values
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    /// Polynomial ring on the generators, weighted by their degrees.
    pub fn generator_ring(&self, coeffs: CoeffRing) -> Result<Ring> {
        PolyRing::new(&self.names, &self.degrees, coeffs)
    }

    pub fn describe(&self) -> String {
        format!("k[{}]", self.names.join(","))
    }
}

/// Hilbert series of a claimed presentation.
pub fn presentation_hilbert(cp: &ClaimedPresentation) -> Result<Series> {
    if cp.relations.is_empty() {
        return Ok(Series::polynomial_ring(&cp.degrees));
    }
    if !cp.complete_intersection {
        return Err(Error::Unsupported(
            "relations without a regularity certificate: use charclass::dim_degree for degreewise dimensions".into(),
        ));
    }
    let mut rel_degrees = Vec::new();
    for r in &cp.relations {
        rel_degrees.push(
            r.homogeneous_degree()?
                .ok_or_else(|| Error::InvalidArgument("zero relation in a complete intersection".into()))?,
        );
    }
    Ok(Series::complete_intersection(&cp.degrees, &rel_degrees))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub degree: u32,
    /// Coefficient of the claimed Hilbert series.
    pub expected: i128,
    /// Rank of the span of generator monomials of this degree.
    pub span_rank: usize,
    /// Dimension of the invariants, by brute force.
    pub invariants: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonInvariant {
    pub generator: String,
    pub group_element: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub action: String,
    pub claim: String,
    pub generator_degrees: Vec<(String, u32)>,
    pub max_degree: u32,
    pub non_invariant: Option<NonInvariant>,
    pub rows: Vec<DegreeCheck>,
    pub pass: bool,
}

impl PresentationReport {
    pub fn first_failure(&self) -> Option<u32> {
        self.rows.iter().find(|r| !r.ok).map(|r| r.degree)
    }
}

/// The first generator value moved by some action generator.
pub fn find_non_invariant(action: &WeylAction, cp: &ClaimedPresentation) -> Result<Option<NonInvariant>> {
    for (name, v) in cp.names.iter().zip(&cp.values) {
        PolyRing::check_same(v.ring(), action.ring())?;
        for g in action.generators() {
            if g.hom.apply(v)? != *v {
                return Ok(Some(NonInvariant { generator: name.clone(), group_element: g.name.clone() }));
            }
        }
    }
    Ok(None)
}

/// Products of generator values, indexed by monomials in the generator ring.
struct ProductCache {
    gen_ring: Ring,
    values: Vec<Poly>,
    memo: FxHashMap<Monomial, Poly>,
}

impl ProductCache {
    fn new(gen_ring: Ring, values: Vec<Poly>) -> ProductCache {
        ProductCache { gen_ring, values, memo: FxHashMap::default() }
    }

    fn value(&mut self, m: &Monomial) -> Poly {
        if let Some(p) = self.memo.get(m) {
            return p.clone();
        }
        let out = match (0..self.gen_ring.nvars()).find(|&v| m.exponent(v) > 0) {
            None => Poly::one(self.values[0].ring()),
            Some(v) => {
                let rest = m.div(&self.gen_ring.var_monomial(v)).unwrap();
                let r = self.value(&rest);
                &r * &self.values[v]
            }
        };
        self.memo.insert(m.clone(), out.clone());
        out
    }
}

/// Checks, for every degree up to `max_degree`, that the claimed generators
/// are invariant, that their monomials of that degree are linearly
/// independent in the number predicted by the series, and that they span
/// all invariants of that degree.
pub fn verify_presentation(action: &WeylAction, cp: &ClaimedPresentation, max_degree: u32) -> Result<PresentationReport> {
    let mut report = PresentationReport {
        action: action.label.clone(),
        claim: cp.describe(),
        generator_degrees: cp.names.iter().cloned().zip(cp.degrees.iter().copied()).collect(),
        max_degree,
        non_invariant: find_non_invariant(action, cp)?,
        rows: Vec::new(),
        pass: false,
    };
    if report.non_invariant.is_some() {
        return Ok(report);
    }
    let series = presentation_hilbert(cp)?;
    let expected = series.coefficients(max_degree as usize);
    let ring = action.ring();
    let gen_ring = cp.generator_ring(ring.coeff_ring())?;
    let mut cache = ProductCache::new(gen_ring.clone(), cp.values.clone());
    for d in 0..=max_degree {
        let basis = graded_component_basis(ring, d, None);
        let index = index_basis(&basis);
        let mut rows = SparseRows::new(action.characteristic(), basis.len().max(1));
        if cp.values.is_empty() {
            if d == 0 {
                rows.push(vec![(0, 1)]);
            }
        } else {
            for m in graded_component_basis(&gen_ring, d, None) {
                let v = cache.value(&m);
                rows.push(coordinates(&v, &index)?);
            }
        }
        let span_rank = rows.rank()?;
        let invariants = brute_invariant_dimension(action, d)?;
        let exp = expected[d as usize];
        let ok = exp == span_rank as i128 && span_rank == invariants;
        report.rows.push(DegreeCheck { degree: d, expected: exp, span_rank, invariants, ok });
    }
    report.pass = report.rows.iter().all(|r| r.ok);
    Ok(report)
}

/// The invariant ring of the Weyl group of Spin(n) in characteristic 2:
/// `k[c_2..c_r, eta_{r-1}]` for `n = 2r+1`, and `k[c_2..c_r, mu_{r-1}]` or
/// `k[c_2..c_r, mu_r]` for `n = 2r` with `r` even or odd.
pub fn spin_claim(action: &WeylAction) -> Result<ClaimedPresentation> {
    let (r, last) = match action.kind {
        ActionKind::SpinOdd { r } => (r, ("eta".to_string() + &(r - 1).to_string(), eta(action, r - 1)?)),
        ActionKind::SpinEven { r } => {
            let j = if r % 2 == 0 { r - 1 } else { r };
            (r, (format!("mu{j}"), mu(action, j)?))
        }
        _ => return Err(Error::InvalidArgument(format!("{} is not a spin action", action.label))),
    };
    let mut gens: Vec<(String, Poly)> = (2..=r).map(|a| (format!("c{a}"), action.c(a))).collect();
    gens.push(last);
    ClaimedPresentation::polynomial(&format!("{} invariants", action.label), gens)
}

/// `k[c_a, a in degrees]` with `c_a = e_a(x)`.
pub fn symmetric_claim(action: &WeylAction, degrees: &[usize]) -> Result<ClaimedPresentation> {
    let gens = degrees.iter().map(|&a| (format!("c{a}"), action.c(a))).collect();
    ClaimedPresentation::polynomial(&format!("{} symmetric", action.label), gens)
}

/// Invariants of `S_r` on `F_2[x_1..x_r]/(x_1+...+x_r)` against `k[c_2..c_r]`;
/// for `r = 2` the claim is `k[x_1]` instead.
pub fn nakajima_check(r: usize, max_degree: u32) -> Result<PresentationReport> {
    let action = symmetric_quotient_action(r)?;
    let cp = if r == 2 {
        ClaimedPresentation::polynomial("F_2[x]/(x1+x2)", vec![("x1".into(), action.x(1).clone())])?
    } else {
        symmetric_claim(&action, &(2..=r).collect::<Vec<_>>())?
    };
    verify_presentation(&action, &cp, max_degree)
}

/// Setup for the lemma on `x -> x + a`: the ring `R[x]` with `R` given by
/// `base` (names and degrees) over `F_2`, and `a` given as text in `R`.
pub fn inv2_action(base: &[(&str, u32)], a: &str) -> Result<(WeylAction, Poly, Poly)> {
    let mut names: Vec<&str> = base.iter().map(|b| b.0).collect();
    let mut weights: Vec<u32> = base.iter().map(|b| b.1).collect();
    let probe = PolyRing::new(&names, &weights, CoeffRing::F2)?;
    let a_base = Poly::parse(&probe, a)?;
    let da = a_base
        .homogeneous_degree()?
        .ok_or_else(|| Error::InvalidArgument("a = 0: the action is trivial and the lemma does not apply".into()))?;
    if da == 0 {
        return Err(Error::InvalidArgument("a must have positive degree".into()));
    }
    names.push("x");
    weights.push(da);
    let ring = PolyRing::new(&names, &weights, CoeffRing::F2)?;
    let a_poly = Poly::parse(&ring, a)?;
    let x = Poly::var(&ring, ring.nvars() - 1);
    let mut images: Vec<Option<Poly>> = (0..ring.nvars()).map(|v| Some(Poly::var(&ring, v))).collect();
    images[ring.nvars() - 1] = Some(&x + &a_poly);
    let g = ActionGenerator { name: "x->x+a".into(), hom: SubstHom::new(&ring, &ring, images)? };
    let action = WeylAction::new("F_2[R][x] with x -> x+a", &ring, vec![g])?;
    Ok((action, x, a_poly))
}

/// Invariants of `x -> x + a` on `R[x]` are `R[u]` with `u = x(x + a)`,
/// checked degree by degree for `R = F_2[base]`.
pub fn lemma_inv2_check(base: &[(&str, u32)], a: &str, max_degree: u32) -> Result<PresentationReport> {
    let (action, x, a_poly) = inv2_action(base, a)?;
    let ring = action.ring().clone();
    let mut gens: Vec<(String, Poly)> = base.iter().map(|b| (b.0.to_string(), Poly::var_named(&ring, b.0).unwrap())).collect();
    gens.push(("u".into(), &x * &(&x + &a_poly)));
    let cp = ClaimedPresentation::polynomial("R[x(x+a)]", gens)?;
    verify_presentation(&action, &cp, max_degree)
}

/// `verify_presentation` on the spin model with its claimed generators.
pub fn verify_spin(n: usize, max_degree: u32) -> Result<PresentationReport> {
    let action = spin_action(n, 2)?;
    let cp = spin_claim(&action)?;
    verify_presentation(&action, &cp, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_of_claims() {
        let a = spin_action(7, 2).unwrap();
        let cp = spin_claim(&a).unwrap();
        assert_eq!(cp.degrees(), [2, 3, 4]);
        assert_eq!(presentation_hilbert(&cp).unwrap().coefficient(4), 2);
        let empty = ClaimedPresentation::polynomial("k", vec![]).unwrap();
        assert_eq!(presentation_hilbert(&empty).unwrap().coefficients(3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn spin7_passes() {
        let rep = verify_spin(7, 10).unwrap();
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn wrong_claim_fails_in_degree_one() {
        let a = spin_action(7, 2).unwrap();
        // c_1 vanishes in the quotient, so the claimed generator is zero
        assert!(symmetric_claim(&a, &[1, 2, 3]).is_err());
        let cp = ClaimedPresentation::polynomial("bogus", vec![("x1".into(), a.x(1).clone())]).unwrap();
        let rep = verify_presentation(&a, &cp, 4).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.non_invariant.unwrap().generator, "x1");
    }

    #[test]
    fn spin8_without_mu_fails_where_mu_lives() {
        let a = spin_action(8, 2).unwrap();
        let cp = symmetric_claim(&a, &[2, 3, 4]).unwrap();
        let rep = verify_presentation(&a, &cp, 6).unwrap();
        assert_eq!(rep.first_failure(), Some(4));
    }

    #[test]
    fn lemma_inv2_small() {
        let rep = lemma_inv2_check(&[("y", 1)], "y", 6).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert!(lemma_inv2_check(&[("y", 1)], "0", 3).is_err());
    }

    #[test]
    fn nakajima_small() {
        assert!(nakajima_check(3, 8).unwrap().pass);
        assert!(nakajima_check(2, 8).unwrap().pass);
        let a = symmetric_quotient_action(2).unwrap();
        let rep = verify_presentation(&a, &symmetric_claim(&a, &[2]).unwrap(), 4).unwrap();
        assert!(!rep.pass);
    }
}
