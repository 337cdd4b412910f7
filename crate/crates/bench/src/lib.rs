//! Fixtures shared by the benchmarks in `benches/`.

pub use jck_core;

use jck_core::catalog::catalog_get;
use jck_core::{JordanAlgebra, RunConfig, Scalar};

pub fn algebra(name: &str) -> JordanAlgebra {
    catalog_get(name, &RunConfig::default()).expect("catalog entry").algebra
}

/// `count` seeded vectors of length `k`.
pub fn points(label: &str, count: usize, k: usize) -> Vec<Vec<Scalar>> {
    let mut s = RunConfig::default().sampler(label);
    (0..count).map(|_| s.vector(k)).collect()
}
