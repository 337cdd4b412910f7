//! Points of projective space with exact homogeneous coordinates.

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, Debug)]
pub struct ProjectivePoint<F: Field> {
    coords: Vec<F>,
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(coords: Vec<F>) -> Result<Self> {
        if coords.iter().all(|c| c.vanishes()) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F> {
        self.coords
    }

    /// Scaled so the first nonzero coordinate is 1.
    pub fn normalized(&self) -> Vec<F> {
        let lead = self.coords.iter().find(|c| !c.vanishes()).unwrap();
        let inv = lead.try_inv().unwrap();
        self.coords.iter().map(|c| c.clone() * inv.clone()).collect()
    }
}

impl<F: Field> PartialEq for ProjectivePoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords.len() == other.coords.len() && self.normalized() == other.normalized()
    }
}

/// `a = c b` for some nonzero `c`.
pub fn proj_equal<F: Field>(a: &[F], b: &[F]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    Ok(ProjectivePoint::new(a.to_vec())? == ProjectivePoint::new(b.to_vec())?)
}

/// True when the vectors are linearly dependent (zero vectors included).
pub fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    let Some(p) = a.iter().position(|c| !c.vanishes()) else {
        return true;
    };
    (0..a.len()).all(|j| (a[p].clone() * b[j].clone() - a[j].clone() * b[p].clone()).vanishes())
}
