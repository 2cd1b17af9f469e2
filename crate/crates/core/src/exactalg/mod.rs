//! Exact arithmetic: coefficients, weighted polynomial rings, substitution
//! homomorphisms, determinants and linear algebra over small prime fields.

mod basis;
mod coeff;
mod det;
mod matrix;
mod poly;
mod ring;
mod sparse;
mod subst;
mod symmetric;
mod text;

pub use basis::{
    count_monomials, graded_component_basis, graded_component_basis_bounded, index_basis, DEFAULT_MONOMIAL_GUARD,
};
pub use coeff::{Coeff, CoeffRing};
pub use det::{determinant, determinant_bareiss, determinant_cofactor, COFACTOR_LIMIT};
pub use matrix::{fp_kernel_dimension, F2Matrix, FpMatrix, ModMatrix};
pub use poly::{product, sum, Poly, TermJson};
pub use ring::{Exponents, Monomial, PolyRing, Ring};
pub use sparse::SparseRows;
pub use subst::SubstHom;
pub use symmetric::{elementary_symmetric, elementary_symmetric_vars, for_each_subset};

/// `a` op `b` for the polynomial arithmetic entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
}

pub fn poly_arith(a: &Poly, b: &Poly, op: ArithOp) -> crate::Result<Poly> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

/// Coefficient vector of a homogeneous polynomial against a monomial basis,
/// as sparse `(column, residue)` pairs. Terms outside the basis are an error.
pub fn coordinates(
    f: &Poly,
    index: &rustc_hash::FxHashMap<Monomial, usize>,
) -> crate::Result<Vec<(usize, u64)>> {
    f.terms()
        .map(|(m, c)| {
            let col = index.get(m).copied().ok_or_else(|| {
                crate::Error::InvalidArgument(format!(
                    "monomial {} is outside the basis",
                    f.ring().format_monomial(m)
                ))
            })?;
            let v = c
                .residue()
                .ok_or_else(|| crate::Error::Unsupported("coordinates need prime-field coefficients".into()))?;
            Ok((col, v))
        })
        .collect()
}
