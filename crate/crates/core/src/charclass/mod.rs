//! Characteristic classes in characteristic 2: presentations of the
//! cohomology of BSO(n), BO(n), B mu_p and B Z/2, u-class calculus,
//! restriction maps, the Bockstein, and Jacobian injectivity certificates.

mod presentation;
mod restriction;
mod uclass;

pub use presentation::{
    bmu_p_presentation, bo_presentation, bso_presentation, bz2_presentation, dim_degree, dim_degree_guarded,
    isotropic_grassmannian_chow, isotropic_grassmannian_hodge, kunneth, point_presentation, Generator,
    GradedPresentation, PresentationJson,
};
pub use restriction::{
    beta_odd_image, bilinear_odd_image, bo2_power_target, bockstein, jacobian_certificate, k_projection,
    k_target, restriction_bo2r_to_bo2r, restriction_bso_even_to_h, restriction_bso_to_bo2r, restriction_to_k,
    Bockstein, JacobianReport, JacobianVariant, RestrictionHom,
};
pub use uclass::{whitney_sum, UClass};
