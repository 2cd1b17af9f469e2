//! Steenrod squares on Stiefel-Whitney rings, Quillen's presentation of
//! `H*(BSpin(n); F_2)`, and the degree-32 comparison for Spin(11).

mod compare;
mod presentation;
mod sw;

pub use compare::{
    k_image_rank, mu5_independent_on_torus, spin11_compare, spin11_explicit_presentation, spin11_lower_bound_ring,
    Spin11Report, COMPARE_DEGREE,
};
pub use presentation::{
    h_value, quillen_dim, quillen_dim_with, quillen_dims, quillen_presentation, theta_sequence, QuillenPresentation,
    QuillenSummary,
};
pub use sw::{binomial_mod2, sq, SWRing};
