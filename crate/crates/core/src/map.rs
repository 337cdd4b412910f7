//! Rational maps between projective spaces, given by tuples of forms.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, UniPoly};
use crate::projective::proportional;
use crate::scalar::{Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    source_vars: usize,
    degree: u32,
    components: Vec<MultiPoly>,
}

impl RationalMap {
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidMap("no components".into()))?;
        let source_vars = first.num_vars();
        if let Some(bad) = components.iter().find(|c| c.num_vars() != source_vars) {
            return Err(Error::VarCountMismatch { left: source_vars, right: bad.num_vars() });
        }
        let degree = components
            .iter()
            .find_map(MultiPoly::degree)
            .ok_or_else(|| Error::InvalidMap("all components vanish".into()))?;
        if degree == 0 {
            return Err(Error::InvalidMap("components are constant".into()));
        }
        if let Some(i) = components.iter().position(|c| !c.is_homogeneous_of(degree)) {
            return Err(Error::InvalidMap(format!(
                "component {} is not homogeneous of degree {degree}",
                i + 1
            )));
        }
        Ok(Self { source_vars, degree, components })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(MultiPoly::vars(n)).expect("coordinate functions form a map")
    }

    pub fn source_vars(&self) -> usize {
        self.source_vars
    }

    pub fn target_len(&self) -> usize {
        self.components.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn eval<R: Ring>(&self, point: &[R]) -> Result<Vec<R>> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RationalMap) -> Result<RationalMap> {
        let comps = self
            .components
            .iter()
            .map(|c| c.compose(&inner.components))
            .collect::<Result<Vec<_>>>()?;
        RationalMap::new(comps)
    }

    /// `ell ∘ self` for a matrix `ell` acting on the target coordinates.
    pub fn then_linear(&self, ell: &[Vec<Scalar>]) -> Result<RationalMap> {
        let n = self.components.len();
        if ell.len() != n || ell.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: ell.len() });
        }
        let comps = ell
            .iter()
            .map(|row| {
                row.iter().zip(&self.components).fold(
                    MultiPoly::zero(self.source_vars),
                    |acc, (a, c)| if a.is_zero() { acc } else { &acc + &c.scale_by(a) },
                )
            })
            .collect();
        RationalMap::new(comps)
    }

    /// The components along `p + t q`, with their common univariate factor
    /// removed.
    pub fn restrict_to_line(&self, p: &[Scalar], q: &[Scalar]) -> Result<Vec<UniPoly>> {
        for v in [p, q] {
            if v.len() != self.source_vars {
                return Err(Error::ArityMismatch { expected: self.source_vars, got: v.len() });
            }
        }
        if proportional(p, q) {
            return Err(Error::DegenerateLine);
        }
        Ok(primitive_tuple(self.restrict_raw(p, q)?))
    }

    /// The components along `p + t q` without any normalization.
    pub fn restrict_raw(&self, p: &[Scalar], q: &[Scalar]) -> Result<Vec<UniPoly>> {
        let line: Vec<UniPoly> = p
            .iter()
            .zip(q)
            .map(|(a, b)| UniPoly::new(vec![a.clone(), b.clone()]))
            .collect();
        self.eval(&line)
    }
}

/// Monic gcd of a tuple of univariate polynomials.
pub fn tuple_gcd(polys: &[UniPoly]) -> UniPoly {
    polys.iter().fold(UniPoly::zero(), |g, p| g.gcd(p))
}

/// Divides out the common factor; the scalar normalization is left alone.
pub fn primitive_tuple(polys: Vec<UniPoly>) -> Vec<UniPoly> {
    let g = tuple_gcd(&polys);
    if g.degree().unwrap_or(0) == 0 {
        return polys;
    }
    polys.into_iter().map(|p| p / g.clone()).collect()
}
