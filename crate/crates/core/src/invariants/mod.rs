//! Weyl group invariants in characteristic `p`: the spin and classical
//! models, the classes `eta_j` and `mu_j`, and brute-force verification of
//! claimed invariant rings.

mod action;
mod brute;
mod presentation;

pub use action::{
    classical_action, eta, mu, spin_action, symmetric_quotient_action, ActionGenerator, ActionKind, WeylAction,
};
pub use brute::{brute_invariant_dimension, invariant_dimension_with, InvariantMethod};
pub use presentation::{
    find_non_invariant, inv2_action, lemma_inv2_check, nakajima_check, presentation_hilbert, spin_claim,
    symmetric_claim, verify_presentation, verify_spin, ClaimedPresentation, DegreeCheck, NonInvariant,
    PresentationReport,
};
