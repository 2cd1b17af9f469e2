//! Python bindings for modp-core.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use modp_core::charclass::{jacobian_certificate, whitney_sum, JacobianVariant, UClass};
use modp_core::exactalg::{CoeffRing, Poly, PolyRing};
use modp_core::groupdata::{fundamental_degrees, good_primes_excluded, torsion_primes, GroupSpec};
use modp_core::invariants::{brute_invariant_dimension, spin_action, verify_spin as core_verify_spin};
use modp_core::quillen::{h_value as core_h_value, quillen_dims as core_quillen_dims, spin11_compare as core_compare, SWRing};
use modp_core::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Verification(_) | Error::GuardExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn group(name: &str) -> PyResult<GroupSpec> {
    GroupSpec::parse(name).map_err(to_py)
}

/// Fundamental degrees of a group such as "B3" or "Spin(11)".
#[pyfunction]
fn degrees(name: &str) -> PyResult<Vec<u32>> {
    Ok(fundamental_degrees(&group(name)?).0)
}

#[pyfunction]
fn bad_primes(name: &str) -> PyResult<Vec<u64>> {
    Ok(good_primes_excluded(&group(name)?).into_iter().collect())
}

#[pyfunction]
fn torsion(name: &str) -> PyResult<Vec<u64>> {
    Ok(torsion_primes(&group(name)?).into_iter().collect())
}

/// Dimension of the degree-`d` invariants of the spin model for Spin(n).
#[pyfunction]
fn spin_invariant_dimension(n: usize, d: u32) -> PyResult<usize> {
    let action = spin_action(n, 2).map_err(to_py)?;
    brute_invariant_dimension(&action, d).map_err(to_py)
}

/// Per-degree check of the claimed spin invariant ring.
#[pyfunction]
fn verify_spin<'py>(py: Python<'py>, n: usize, max_degree: u32) -> PyResult<Bound<'py, PyDict>> {
    let r = core_verify_spin(n, max_degree).map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("claim", &r.claim)?;
    out.set_item("generators", r.generator_degrees.clone())?;
    let rows: Vec<(u32, i128, usize, usize)> =
        r.rows.iter().map(|x| (x.degree, x.expected, x.span_rank, x.invariants)).collect();
    out.set_item("rows", rows)?;
    out.set_item("pass", r.pass)?;
    Ok(out)
}

#[pyfunction]
fn h_value(n: u32) -> PyResult<u32> {
    core_h_value(n).map_err(to_py)
}

/// Dimensions of H^d(BSpin(n); F_2) for d = 0..=max_degree.
#[pyfunction]
fn quillen_dims(n: u32, max_degree: u32) -> PyResult<Vec<usize>> {
    core_quillen_dims(n, max_degree).map_err(to_py)
}

#[pyfunction]
fn spin11_compare<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let r = core_compare().map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("D_top", r.d_top)?;
    out.set_item("D_low", r.d_low)?;
    out.set_item("D_dR_lower", r.d_dr_lower)?;
    out.set_item("verdict", r.verdict)?;
    Ok(out)
}

/// `Sq^i` of a polynomial in the Stiefel-Whitney ring of BO(n), or of BSO(n)
/// when `oriented` is true.
#[pyfunction]
#[pyo3(signature = (i, poly, n, oriented = false))]
fn sq(i: u32, poly: &str, n: u32, oriented: bool) -> PyResult<String> {
    let ring = SWRing::new(n, oriented).map_err(to_py)?;
    let f = Poly::parse(ring.ring(), poly).map_err(to_py)?;
    Ok(ring.sq(i, &f).map_err(to_py)?.to_string())
}

/// Whitney sum of two classes given by their components u_1, u_2, ...
#[pyfunction]
fn whitney(vars: Vec<String>, e: Vec<String>, f: Vec<String>) -> PyResult<Vec<String>> {
    let ring = PolyRing::standard(&vars, CoeffRing::F2).map_err(to_py)?;
    let class = |comps: &[String]| -> PyResult<UClass> {
        let mut out = vec![Poly::one(&ring)];
        for c in comps {
            out.push(Poly::parse(&ring, c).map_err(to_py)?);
        }
        UClass::new(out).map_err(to_py)
    };
    let s = whitney_sum(&class(&e)?, &class(&f)?).map_err(to_py)?;
    Ok(s.components().iter().map(|c| c.to_string()).collect())
}

/// `(determinant, pass)` for the O or SO Jacobian certificate.
#[pyfunction]
fn jacobian(r: usize, variant: &str) -> PyResult<(String, bool)> {
    let v: JacobianVariant = variant.parse().map_err(to_py)?;
    let rep = jacobian_certificate(r, v).map_err(to_py)?;
    Ok((rep.determinant, rep.pass))
}

#[pymodule]
fn modp_invariants(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(degrees, m)?)?;
    m.add_function(wrap_pyfunction!(bad_primes, m)?)?;
    m.add_function(wrap_pyfunction!(torsion, m)?)?;
    m.add_function(wrap_pyfunction!(spin_invariant_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(verify_spin, m)?)?;
    m.add_function(wrap_pyfunction!(h_value, m)?)?;
    m.add_function(wrap_pyfunction!(quillen_dims, m)?)?;
    m.add_function(wrap_pyfunction!(spin11_compare, m)?)?;
    m.add_function(wrap_pyfunction!(sq, m)?)?;
    m.add_function(wrap_pyfunction!(whitney, m)?)?;
    m.add_function(wrap_pyfunction!(jacobian, m)?)?;
    Ok(())
}
