//! Finitely generated `Z_(p)`-submodules of `Q` and of `Q(√d)`, the
//! semirings they form, and the extension of `p`-adic valuations to
//! quadratic fields.

mod extension;
mod lattice;
mod local;
mod qfrac;
mod quad;

/// Exact rationals.
pub type Q = num_rational::BigRational;

pub use extension::{
    check_integral_relations, check_principal_invertible, check_qfrac_contraction, check_valuation_axioms,
    extend_valuation, extension_oracle, integral_witness, lattice_samples, padic_value, restriction_embedding,
    sample_battery, CheckLine, ExtensionDatum, ExtensionPrime, IntegralRelationReport, Splitting, VerifiedExtension,
    SUPPORTED_D, WITNESS_STEPS,
};
pub use lattice::{
    hom_from_valuation, lat_add, lat_leq, lat_mul, local_integer_samples, subsemigroup_of_submodule, LatticeHom,
    LatticeSemiring, QuadLattice, Submodule,
};
pub use local::{canonical_residue, is_local_integer, is_prime, parse_rational, ppow, rational, vp, LocalRational};
pub use qfrac::{qf_add, qf_leq, qf_mul, qf_subsemigroup_of_submodule, QSubmodule, QfracIdeal, QfracSemiring};
pub use quad::{parse_quad, QuadElem};
