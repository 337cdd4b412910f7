//! Jordan algebras given by structure constants.

mod algebra;
pub mod constructions;
mod minpoly;
mod spec;

pub use algebra::{AlgebraCertificate, IdentityCheck, JordanAlgebra, SAMPLED_IDENTITY_POINTS};
pub use constructions::{
    direct_product, from_associative, hermitian_h3, identity_form, opposite, spin_factor,
    CompositionAlgebra,
};
pub use minpoly::{min_poly_residual, GenericMinPoly};
pub use spec::{basis_vector, AlgebraSpec, SpecJson};
