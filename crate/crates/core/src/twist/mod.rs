//! Twisting elements of jordanian type, their coproducts, antipodes and
//! R-matrices.

mod build;
mod classical;
mod expansion;
pub mod golden;
mod hopf;
mod real;
mod spec;

pub use build::bernoulli_generating;
pub use classical::{classical_r, cybe_residual_uea, lie_tensor, lie_tensor_to_uea};
pub use expansion::{canonical_realization, r_double_sum, r_expansion_residuals, r_ordered_product, ZBasis};
pub use hopf::{
    antipode_twist_element, factorization_residuals, hopf_axiom_residuals, qybe_residual, HopfAxiomResiduals, triangularity_residual,
    twist_equation_residual, universal_r, Coproduct,
};
pub use real::{
    anti_automorphism_violations, involution_violations, real_form_residual, theta_signs_borel,
    theta_signs_gl,
};
pub use spec::{
    Ambient, ExtensionCoefficients, Factor, FactorCoefficients, Realization, TwistSpec, Variant,
};

#[cfg(test)]
mod tests;
