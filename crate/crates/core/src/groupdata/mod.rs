//! Catalog of split reductive groups: degrees, prime data, Weyl groups and
//! flag-variety Poincaré polynomials.

mod catalog;
mod series;
mod weyl;

pub use catalog::{
    fundamental_degrees, good_primes_excluded, simply_connected_catalog, torsion_primes, CartanType,
    DegreeList, Family, GroupSpec,
};
pub use series::Series;
pub use weyl::{
    cartan_length_series, flag_poincare, isotropic_grassmannian_poincare, weyl_elements, weyl_length_series,
    weyl_order, SignedPerm, MAX_EXPLICIT_RANK, WEYL_BFS_LIMIT,
};
