//! Exact computations around modular invariant theory of Weyl groups,
//! Hodge and de Rham cohomology rings of classifying stacks in
//! characteristic 2, u-classes, and Steenrod squares via Wu's formula.

pub mod charclass;
mod error;
pub mod exactalg;
pub mod groupdata;
pub mod invariants;
pub mod quillen;

pub use error::{Error, Result};
