//! Exact computations with cubic Jordan algebras: generic minimum
//! polynomials, the twisted cubic `x -> [1 : x : x# : N(x)]`, quadro-quadric
//! Cremona involutions, the one-apparent-double-point secant construction and
//! the Castelnuovo-Harris bound functions.
//!
//! Everything runs over the rationals (optionally `Q(sqrt D)`), so every
//! identity checked here is checked exactly.

pub mod error;
pub mod scalar;
pub mod poly;
pub mod parse;
pub mod map;
pub mod projective;
pub mod linalg;
pub mod config;
pub mod jordan;
pub mod catalog;
pub mod cubic;
pub mod cremona;
pub mod variety;
pub mod bounds;
pub mod certify;

pub use config::{RunConfig, Sampler};
pub use error::{Error, Result};
pub use jordan::{AlgebraSpec, GenericMinPoly, IdentityCheck, JordanAlgebra};
pub use map::RationalMap;
pub use poly::{MultiPoly, UniPoly};
pub use projective::ProjectivePoint;
pub use scalar::{QuadScalar, Scalar};
