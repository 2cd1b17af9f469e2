//! Weyl group actions on polynomial functions on a maximal torus, in characteristic `p`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{product, sum, CoeffRing, Poly, PolyRing, Ring, SubstHom};
use crate::groupdata::Family;

/// Which model a [`WeylAction`] was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ActionKind {
    /// Spin(2r+1) in characteristic 2.
    SpinOdd { r: usize },
    /// Spin(2r) in characteristic 2.
    SpinEven { r: usize },
    /// Signed permutations on `F_p[x_1..x_r]`.
    Classical { family: Family, rank: usize },
    /// `S_r` on `F_2[x_1..x_r]/(x_1 + ... + x_r)`.
    SymmetricQuotient { r: usize },
    Custom,
}

#[derive(Clone, Debug)]
pub struct ActionGenerator {
    pub name: String,
    pub hom: SubstHom,
}

/// A group acting on a polynomial ring, given by generating automorphisms.
///
/// When the model has the linear relation `x_1 + ... + x_r = 0`, the ring
/// has no variable for `x_r`; [`WeylAction::x`] returns it as the sum of the
/// others.
#[derive(Clone, Debug)]
pub struct WeylAction {
    pub kind: ActionKind,
    pub label: String,
    ring: Ring,
    generators: Vec<ActionGenerator>,
    xs: Vec<Poly>,
    a: Option<Poly>,
}

impl WeylAction {
    pub fn new(label: &str, ring: &Ring, generators: Vec<ActionGenerator>) -> Result<WeylAction> {
        for g in &generators {
            PolyRing::check_same(g.hom.source(), ring)?;
            PolyRing::check_same(g.hom.target(), ring)?;
            if !g.hom.is_degree_preserving() {
                return Err(Error::InvalidArgument(format!("generator {} does not preserve degrees", g.name)));
            }
        }
        let xs = (0..ring.nvars()).map(|v| Poly::var(ring, v)).collect();
        Ok(WeylAction { kind: ActionKind::Custom, label: label.to_string(), ring: ring.clone(), generators, xs, a: None })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[ActionGenerator] {
        &self.generators
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.coeff_ring().characteristic()
    }

    /// Torus coordinate `x_i` (1-based) as an element of the ring.
    pub fn x(&self, i: usize) -> &Poly {
        &self.xs[i - 1]
    }

    pub fn torus_rank(&self) -> usize {
        self.xs.len()
    }

    /// The class `A` with `2A = x_1 + ... + x_r`, for the spin models.
    pub fn a(&self) -> Option<&Poly> {
        self.a.as_ref()
    }

    /// The same ring with only the generators whose names pass the filter.
    pub fn restricted(&self, keep: impl Fn(&str) -> bool) -> WeylAction {
        let mut out = self.clone();
        out.generators.retain(|g| keep(&g.name));
        out
    }

    /// Elementary symmetric polynomial `c_a = e_a(x_1, ..., x_r)`.
    pub fn c(&self, a: usize) -> Poly {
        crate::exactalg::elementary_symmetric(&self.ring, a, &self.xs)
    }

    /// Checks that every generator has order dividing `order` on each variable.
    pub fn check_finite_order(&self, order: u32) -> Result<()> {
        for g in &self.generators {
            for v in 0..self.ring.nvars() {
                let mut p = Poly::var(&self.ring, v);
                for _ in 0..order {
                    p = g.hom.apply(&p)?;
                }
                if p != Poly::var(&self.ring, v) {
                    return Err(Error::Verification(format!(
                        "generator {} does not have order dividing {order} on {}",
                        g.name,
                        self.ring.name(v)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `I subset {1..j}` products `prod (A + sum_{i in I} x_i)`, over all
    /// subsets or only the even ones.
    fn subset_product(&self, j: usize, even_only: bool) -> Result<Poly> {
        let a = self.a.as_ref().ok_or_else(|| Error::Unsupported(format!("{} has no class A", self.label)))?;
        let mut factors = Vec::new();
        for mask in 0u64..(1 << j) {
            if even_only && mask.count_ones() % 2 == 1 {
                continue;
            }
            let chosen: Vec<&Poly> = (0..j).filter(|i| mask >> i & 1 == 1).map(|i| &self.xs[i]).collect();
            factors.push(a - &sum(&self.ring, chosen));
        }
        Ok(product(&self.ring, &factors))
    }
}

fn spin_ring(r: usize) -> Result<Ring> {
    let mut names: Vec<String> = (1..r).map(|i| format!("x{i}")).collect();
    names.push("A".into());
    PolyRing::standard(&names, CoeffRing::F2)
}

/// Swaps coordinates `i` and `j`; coordinates `0..own` are ring variables
/// with the same index, any further ones are expressions in them.
fn transposition(ring: &Ring, xs: &[Poly], own: usize, i: usize, j: usize) -> Result<ActionGenerator> {
    let mut images: Vec<Option<Poly>> = (0..ring.nvars()).map(|v| Some(Poly::var(ring, v))).collect();
    if i < own {
        images[i] = Some(xs[j].clone());
    }
    if j < own {
        images[j] = Some(xs[i].clone());
    }
    Ok(ActionGenerator { name: format!("s{}{}", i + 1, j + 1), hom: SubstHom::new(ring, ring, images)? })
}

/// Transpositions generating `S_r`: the adjacent ones, and also `(r 1)` once
/// `r >= 3` (redundant as a generator, but it treats every coordinate alike).
fn symmetric_generators(ring: &Ring, xs: &[Poly], own: usize) -> Result<Vec<ActionGenerator>> {
    let r = xs.len();
    let mut out = Vec::new();
    for i in 0..r.saturating_sub(1) {
        out.push(transposition(ring, xs, own, i, i + 1)?);
    }
    if r >= 3 {
        out.push(transposition(ring, xs, own, r - 1, 0)?);
    }
    Ok(out)
}

/// The Weyl group of Spin(n) acting on `F_2[x_1..x_r, A]/(x_1 + ... + x_r)`,
/// `r = floor(n/2)`. Generators: transpositions of the `x_i` fixing `A`, and
/// `eps_i: A -> A - x_i` (n odd) or `eps_1 eps_j: A -> A - x_1 - x_j` (n even).
pub fn spin_action(n: usize, p: u64) -> Result<WeylAction> {
    if p != 2 {
        return Err(Error::Unsupported("the spin model is only defined in characteristic 2".into()));
    }
    if n < 6 {
        return Err(Error::InvalidArgument(format!("spin_action needs n >= 6, got {n}")));
    }
    let r = n / 2;
    let ring = spin_ring(r)?;
    let mut xs: Vec<Poly> = (0..r - 1).map(|v| Poly::var(&ring, v)).collect();
    xs.push(sum(&ring, &xs));
    let a = Poly::var(&ring, r - 1);
    let mut generators = symmetric_generators(&ring, &xs, r - 1)?;
    let sign = |name: String, shift: Poly| -> Result<ActionGenerator> {
        let mut images: Vec<Option<Poly>> = (0..ring.nvars()).map(|v| Some(Poly::var(&ring, v))).collect();
        images[r - 1] = Some(&a - &shift);
        Ok(ActionGenerator { name, hom: SubstHom::new(&ring, &ring, images)? })
    };
    if n % 2 == 1 {
        for i in 0..r {
            generators.push(sign(format!("eps{}", i + 1), xs[i].clone())?);
        }
    } else {
        for j in 1..r {
            generators.push(sign(format!("eps1eps{}", j + 1), &xs[0] + &xs[j])?);
        }
    }
    let kind = if n % 2 == 1 { ActionKind::SpinOdd { r } } else { ActionKind::SpinEven { r } };
    Ok(WeylAction { kind, label: format!("Spin({n})"), ring, generators, xs, a: Some(a) })
}

/// The Weyl group of type B, C or D acting on `F_p[x_1..x_r]` by signed
/// permutations. In characteristic 2 the sign changes act trivially.
pub fn classical_action(family: Family, rank: usize, p: u64) -> Result<WeylAction> {
    if rank == 0 {
        return Err(Error::InvalidArgument("classical_action needs rank >= 1".into()));
    }
    let coeffs = CoeffRing::prime(p)?;
    let ring = PolyRing::indexed("x", 1, rank, coeffs)?;
    let xs: Vec<Poly> = (0..rank).map(|v| Poly::var(&ring, v)).collect();
    let mut generators = symmetric_generators(&ring, &xs, rank)?;
    let flip = |name: String, vars: &[usize]| -> Result<ActionGenerator> {
        let mut images: Vec<Option<Poly>> = xs.iter().cloned().map(Some).collect();
        for &v in vars {
            images[v] = Some(-&xs[v]);
        }
        Ok(ActionGenerator { name, hom: SubstHom::new(&ring, &ring, images)? })
    };
    match family {
        Family::B | Family::C => {
            for i in 0..rank {
                generators.push(flip(format!("eps{}", i + 1), &[i])?);
            }
        }
        Family::D => {
            for j in 1..rank {
                generators.push(flip(format!("eps1eps{}", j + 1), &[0, j])?);
            }
        }
        f => return Err(Error::InvalidArgument(format!("classical_action takes B, C or D, not {f}"))),
    }
    Ok(WeylAction {
        kind: ActionKind::Classical { family, rank },
        label: format!("W({family}{rank}) over F_{p}"),
        ring,
        generators,
        xs,
        a: None,
    })
}

/// `S_r` permuting `x_1..x_r` in `F_2[x_1..x_r]/(x_1 + ... + x_r)`.
pub fn symmetric_quotient_action(r: usize) -> Result<WeylAction> {
    if r < 2 {
        return Err(Error::InvalidArgument("symmetric_quotient_action needs r >= 2".into()));
    }
    let ring = PolyRing::indexed("x", 1, r - 1, CoeffRing::F2)?;
    let mut xs: Vec<Poly> = (0..r - 1).map(|v| Poly::var(&ring, v)).collect();
    xs.push(sum(&ring, &xs));
    let generators = symmetric_generators(&ring, &xs, r - 1)?;
    Ok(WeylAction {
        kind: ActionKind::SymmetricQuotient { r },
        label: format!("S_{r} on F_2[x]/(x_1+...+x_{r})"),
        ring,
        generators,
        xs,
        a: None,
    })
}

/// `eta_j = prod_{I subset {1..j}} (A - sum_{i in I} x_i)`, of degree `2^j`.
pub fn eta(action: &WeylAction, j: usize) -> Result<Poly> {
    let r = match action.kind {
        ActionKind::SpinOdd { r } => r,
        _ => return Err(Error::InvalidArgument(format!("eta is defined for odd spin groups, not {}", action.label))),
    };
    if j == 0 || j > r - 1 {
        return Err(Error::InvalidArgument(format!("eta_j needs 1 <= j <= {}, got {j}", r - 1)));
    }
    action.subset_product(j, false)
}

/// `mu_j`: the product over even subsets only, of degree `2^(j-1)`; `mu_1 = A`.
pub fn mu(action: &WeylAction, j: usize) -> Result<Poly> {
    let r = match action.kind {
        ActionKind::SpinEven { r } => r,
        _ => return Err(Error::InvalidArgument(format!("mu is defined for even spin groups, not {}", action.label))),
    };
    if j == 0 || j > r {
        return Err(Error::InvalidArgument(format!("mu_j needs 1 <= j <= {r}, got {j}")));
    }
    action.subset_product(j, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        let a = spin_action(7, 2).unwrap();
        assert_eq!(a.generators().iter().filter(|g| g.name.starts_with('s')).count(), 3);
        assert_eq!(a.generators().iter().filter(|g| g.name.starts_with("eps")).count(), 3);
        let b = spin_action(12, 2).unwrap();
        assert_eq!(b.generators().iter().filter(|g| g.name.starts_with("eps1eps")).count(), 5);
        assert!(spin_action(7, 3).is_err());
    }

    #[test]
    fn generators_are_involutions() {
        for n in [6, 7, 8, 9, 10, 11, 12] {
            spin_action(n, 2).unwrap().check_finite_order(2).unwrap();
        }
        for f in [Family::B, Family::C, Family::D] {
            classical_action(f, 3, 3).unwrap().check_finite_order(2).unwrap();
        }
    }

    #[test]
    fn sign_changes_mod_two_are_trivial() {
        let a = classical_action(Family::C, 3, 2).unwrap();
        for g in a.generators().iter().filter(|g| g.name.starts_with("eps")) {
            assert!(g.hom.images().iter().enumerate().all(|(v, img)| *img == Some(Poly::var(a.ring(), v))));
        }
        let b = classical_action(Family::B, 2, 3).unwrap();
        let eps1 = &b.generators().iter().find(|g| g.name == "eps1").unwrap().hom;
        assert_eq!(eps1.apply(b.x(1)).unwrap().to_string(), "2*x1");
    }

    #[test]
    fn eta_and_mu() {
        let a = spin_action(7, 2).unwrap();
        assert_eq!(eta(&a, 1).unwrap().to_string(), "x1*A + A^2");
        assert_eq!(eta(&a, 2).unwrap().degree(), Some(4));
        assert!(eta(&a, 3).is_err());
        let a9 = spin_action(9, 2).unwrap();
        assert_eq!(eta(&a9, 3).unwrap().degree(), Some(8));
        let b = spin_action(10, 2).unwrap();
        assert_eq!(mu(&b, 1).unwrap().to_string(), "A");
        assert_eq!(mu(&b, 4).unwrap().degree(), Some(8));
        assert_eq!(mu(&b, 2).unwrap(), Poly::parse(b.ring(), "A*(A + x1 + x2)").unwrap());
    }

    #[test]
    fn eta_and_mu_are_fixed_by_their_sign_groups() {
        let a = spin_action(11, 2).unwrap();
        for j in 1..=4 {
            let e = eta(&a, j).unwrap();
            for i in 1..=j {
                let g = &a.generators().iter().find(|g| g.name == format!("eps{i}")).unwrap().hom;
                assert_eq!(g.apply(&e).unwrap(), e);
            }
        }
        let b = spin_action(12, 2).unwrap();
        for j in 1..=6 {
            let m = mu(&b, j).unwrap();
            for i in 2..=j {
                let g = &b.generators().iter().find(|g| g.name == format!("eps1eps{i}")).unwrap().hom;
                assert_eq!(g.apply(&m).unwrap(), m);
            }
        }
    }

    #[test]
    fn last_coordinate_is_the_sum() {
        let a = spin_action(8, 2).unwrap();
        assert_eq!(a.x(4).to_string(), "x1 + x2 + x3");
        assert!(a.c(1).is_zero());
    }
}
