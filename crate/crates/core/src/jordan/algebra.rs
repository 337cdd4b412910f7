use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::minpoly::{self, GenericMinPoly};
use super::spec::{basis_vector, format_vector, AlgebraSpec};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::linalg;
use crate::map::RationalMap;
use crate::poly::MultiPoly;
use crate::scalar::{Ring, Scalar};

/// How the Jordan identity was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityCheck {
    Symbolic,
    Sampled,
}

impl IdentityCheck {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityCheck::Symbolic => "symbolic",
            IdentityCheck::Sampled => "sampled",
        }
    }
}

/// Number of seeded pairs used when the Jordan identity is only sampled.
pub const SAMPLED_IDENTITY_POINTS: usize = 64;

/// A validated commutative unital Jordan algebra.
///
/// Rank and generic minimum polynomial are computed on first use and cached;
/// both depend only on the structure constants and the stored config.
#[derive(Debug)]
pub struct JordanAlgebra {
    spec: AlgebraSpec,
    // (i, j, [(l, c_ij^l)]) for i <= j, skipping zero products
    pairs: Vec<(usize, usize, Vec<(usize, Scalar)>)>,
    identity_check: IdentityCheck,
    config: RunConfig,
    rank: OnceLock<usize>,
    min_poly: OnceLock<Result<GenericMinPoly>>,
    adjoint_form: OnceLock<Result<RationalMap>>,
    trace_coefficients: OnceLock<Result<Vec<Scalar>>>,
}

impl JordanAlgebra {
    /// Validates with the identity check chosen by dimension.
    pub fn validate(spec: AlgebraSpec, config: &RunConfig) -> Result<Self> {
        let mode = if spec.dim() <= config.symbolic_dim_threshold {
            IdentityCheck::Symbolic
        } else {
            IdentityCheck::Sampled
        };
        Self::validate_with(spec, mode, config)
    }

    pub fn validate_with(spec: AlgebraSpec, mode: IdentityCheck, config: &RunConfig) -> Result<Self> {
        spec.check_commutative()?;
        spec.check_unit()?;
        let k = spec.dim();
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in i..k {
                let entries: Vec<(usize, Scalar)> = spec.table()[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(l, c)| (l, c.clone()))
                    .collect();
                if !entries.is_empty() {
                    pairs.push((i, j, entries));
                }
            }
        }
        let algebra = Self {
            spec,
            pairs,
            identity_check: mode,
            config: config.clone(),
            rank: OnceLock::new(),
            min_poly: OnceLock::new(),
            adjoint_form: OnceLock::new(),
            trace_coefficients: OnceLock::new(),
        };
        match mode {
            IdentityCheck::Symbolic => algebra.check_identity_symbolic()?,
            IdentityCheck::Sampled => algebra.check_identity_sampled()?,
        }
        Ok(algebra)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn unit(&self) -> &[Scalar] {
        self.spec.unit()
    }

    pub fn identity_check(&self) -> IdentityCheck {
        self.identity_check
    }

    pub fn config(&self) -> &RunConfig {
        &self.config
    }

    pub fn mul<R: Ring>(&self, x: &[R], y: &[R]) -> Result<Vec<R>> {
        let k = self.dim();
        for v in [x, y] {
            if v.len() != k {
                return Err(Error::DimensionMismatch { expected: k, got: v.len() });
            }
        }
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked<R: Ring>(&self, x: &[R], y: &[R]) -> Vec<R> {
        let mut out = vec![x[0].zero_like(); self.dim()];
        for (i, j, entries) in &self.pairs {
            let (i, j) = (*i, *j);
            let p = if i == j {
                if x[i].vanishes() || y[i].vanishes() {
                    continue;
                }
                x[i].clone() * y[i].clone()
            } else {
                let mut p = x[0].zero_like();
                let mut any = false;
                if !x[i].vanishes() && !y[j].vanishes() {
                    p = x[i].clone() * y[j].clone();
                    any = true;
                }
                if !x[j].vanishes() && !y[i].vanishes() {
                    p = p + x[j].clone() * y[i].clone();
                    any = true;
                }
                if !any {
                    continue;
                }
                p
            };
            if p.vanishes() {
                continue;
            }
            for (l, c) in entries {
                out[*l] = out[*l].clone() + p.scale(c);
            }
        }
        out
    }

    /// The unit lifted into the ring of `like`.
    pub fn unit_like<R: Ring>(&self, like: &R) -> Vec<R> {
        self.unit().iter().map(|c| like.lift(c)).collect()
    }

    /// `x^0 = e, x^1 = x, ..., x^n`.
    pub fn powers<R: Ring>(&self, x: &[R], n: usize) -> Vec<Vec<R>> {
        let mut out = vec![self.unit_like(&x[0])];
        for i in 1..=n {
            let next = if i == 1 { x.to_vec() } else { self.mul_unchecked(x, &out[i - 1]) };
            out.push(next);
        }
        out
    }

    /// Checks `x^2 (y x) = (x^2 y) x` on a symbolic `x` against each basis
    /// vector `y`; the identity is linear in `y`.
    fn check_identity_symbolic(&self) -> Result<()> {
        let k = self.dim();
        let x = MultiPoly::vars(k);
        let x2 = self.mul_unchecked(&x, &x);
        for i in 0..k {
            let y: Vec<MultiPoly> =
                basis_vector(k, i).iter().map(|c| MultiPoly::constant(k, c.clone())).collect();
            let lhs = self.mul_unchecked(&x2, &self.mul_unchecked(&y, &x));
            let rhs = self.mul_unchecked(&self.mul_unchecked(&x2, &y), &x);
            if lhs != rhs {
                let y = basis_vector(k, i);
                let mut sampler = self.config.sampler("jordan-identity-witness");
                for _ in 0..SAMPLED_IDENTITY_POINTS {
                    let x = sampler.vector(k);
                    if !self.identity_holds_at(&x, &y) {
                        return Err(Error::JordanIdentity { x: format_vector(&x), y: format_vector(&y) });
                    }
                }
                return Err(Error::JordanIdentity { x: "generic".into(), y: format_vector(&y) });
            }
        }
        Ok(())
    }

    fn check_identity_sampled(&self) -> Result<()> {
        let k = self.dim();
        let mut sampler = self.config.sampler("jordan-identity");
        for _ in 0..SAMPLED_IDENTITY_POINTS {
            let x = sampler.vector(k);
            let y = sampler.vector(k);
            if !self.identity_holds_at(&x, &y) {
                return Err(Error::JordanIdentity { x: format_vector(&x), y: format_vector(&y) });
            }
        }
        Ok(())
    }

    pub fn identity_holds_at(&self, x: &[Scalar], y: &[Scalar]) -> bool {
        let x2 = self.mul_unchecked(x, x);
        let lhs = self.mul_unchecked(&x2, &self.mul_unchecked(y, x));
        let rhs = self.mul_unchecked(&self.mul_unchecked(&x2, y), x);
        lhs == rhs
    }

    /// Minimal relation `x^j = sum_{i<j} a_i x^i`, as `(j, a)`.
    pub fn krylov_relation(&self, x: &[Scalar]) -> (usize, Vec<Scalar>) {
        let k = self.dim();
        let mut basis: Vec<Vec<Scalar>> = vec![self.unit().to_vec()];
        let mut current = x.to_vec();
        for j in 1..=k {
            if let Some(a) = linalg::express(&basis, &current) {
                return (j, a);
            }
            basis.push(current.clone());
            current = self.mul_unchecked(x, &current);
        }
        let a = linalg::express(&basis, &current).expect("powers beyond the dimension are dependent");
        (k + 1, a)
    }

    /// `dim span{e, x, x^2, ...}` at `x`.
    pub fn local_rank(&self, x: &[Scalar]) -> usize {
        self.krylov_relation(x).0
    }

    /// Maximum of the local rank over seeded samples.
    pub fn rank(&self) -> usize {
        *self.rank.get_or_init(|| {
            let mut sampler = self.config.sampler("rank");
            let k = self.dim();
            (0..self.config.samples.max(1))
                .map(|_| self.local_rank(&sampler.vector(k)))
                .max()
                .unwrap_or(1)
        })
    }

    /// `(sigma_1(x), ..., sigma_m(x))` at a single point.
    ///
    /// Generic points read the coefficients off the Krylov relation; other
    /// points interpolate along a line through them.
    pub fn sigma_at(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        if let Some(Ok(mp)) = self.min_poly.get() {
            return mp.sigma.iter().map(|s| s.eval(x)).collect();
        }
        minpoly::sigma_at(self, x)
    }

    /// `sigma` at `x` interpolated from points on a seeded line through it,
    /// without using the Krylov relation at `x` itself.
    pub fn sigma_interpolated(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        minpoly::sigma_on_line(self, x, self.rank())
    }

    /// The symbolic generic minimum polynomial, computed once and certified
    /// by substitution. Expensive in high dimension.
    pub fn min_poly(&self) -> Result<&GenericMinPoly> {
        self.min_poly
            .get_or_init(|| minpoly::compute(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn has_symbolic_forms(&self) -> bool {
        matches!(self.min_poly.get(), Some(Ok(_)))
    }

    pub fn trace(&self, x: &[Scalar]) -> Result<Scalar> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        let tau = self.trace_coefficients()?;
        Ok(x.iter().zip(tau).map(|(a, b)| a * b).sum())
    }

    /// `T(b_i)` for the basis vectors; the trace is the linear form with
    /// these coefficients.
    pub fn trace_coefficients(&self) -> Result<&[Scalar]> {
        self.trace_coefficients
            .get_or_init(|| {
                (0..self.dim())
                    .map(|i| Ok(self.sigma_at(&basis_vector(self.dim(), i))?.swap_remove(0)))
                    .collect()
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub fn norm(&self, x: &[Scalar]) -> Result<Scalar> {
        Ok(self.sigma_at(x)?.pop().expect("rank is positive"))
    }

    pub fn trace_form(&self) -> Result<MultiPoly> {
        Ok(self.min_poly()?.sigma[0].clone())
    }

    pub fn norm_form(&self) -> Result<MultiPoly> {
        Ok(self.min_poly()?.sigma.last().unwrap().clone())
    }

    /// `x# = sum_{i<m} sigma_i(x) (-x)^{m-1-i}` from given sigma values.
    pub fn adjoint_from_sigma<R: Ring>(&self, x: &[R], sigma: &[R]) -> Vec<R> {
        let m = sigma.len();
        let pw = self.powers(x, m.saturating_sub(1));
        let zero = x[0].zero_like();
        let mut out = vec![zero; self.dim()];
        for i in 0..m {
            let coeff = if i == 0 { x[0].one_like() } else { sigma[i - 1].clone() };
            let e = m - 1 - i;
            let coeff = if e % 2 == 1 { -coeff } else { coeff };
            if coeff.vanishes() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&pw[e]) {
                *o = o.clone() + coeff.clone() * p.clone();
            }
        }
        out
    }

    pub fn adjoint(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let sigma = self.sigma_at(x)?;
        Ok(self.adjoint_from_sigma(x, &sigma))
    }

    /// Adjoint over any ring, through the symbolic forms.
    pub fn adjoint_generic<R: Ring>(&self, x: &[R]) -> Result<Vec<R>> {
        let sigma = self.sigma_generic(x)?;
        Ok(self.adjoint_from_sigma(x, &sigma))
    }

    pub fn sigma_generic<R: Ring>(&self, x: &[R]) -> Result<Vec<R>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        self.min_poly()?.sigma.iter().map(|s| s.eval(x)).collect()
    }

    pub fn norm_generic<R: Ring>(&self, x: &[R]) -> Result<R> {
        Ok(self.sigma_generic(x)?.pop().unwrap())
    }

    /// All `k` components of `x -> x#` as forms of degree `m - 1`.
    pub fn adjoint_form(&self) -> Result<&RationalMap> {
        self.adjoint_form
            .get_or_init(|| {
                let m = self.min_poly()?.m;
                if m < 2 {
                    return Err(Error::WrongRank { needed: 2, found: m });
                }
                let x = MultiPoly::vars(self.dim());
                RationalMap::new(self.adjoint_generic(&x)?)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn invert(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let sigma = self.sigma_at(x)?;
        let n = sigma.last().unwrap().clone();
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv = n.recip();
        Ok(self.adjoint_from_sigma(x, &sigma).into_iter().map(|c| c * &inv).collect())
    }

    pub fn is_invertible(&self, x: &[Scalar]) -> Result<bool> {
        Ok(!self.norm(x)?.is_zero())
    }

    /// `x # y = (x + y)# - x# - y#`.
    pub fn sharp_bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let sum: Vec<Scalar> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        let (s, a, b) = (self.adjoint(&sum)?, self.adjoint(x)?, self.adjoint(y)?);
        Ok(s.iter().zip(a).zip(b).map(|((s, a), b)| s - a - b).collect())
    }

    pub fn sharp_bilinear_generic<R: Ring>(&self, x: &[R], y: &[R]) -> Result<Vec<R>> {
        let sum: Vec<R> = x.iter().zip(y).map(|(a, b)| a.clone() + b.clone()).collect();
        let (s, a, b) = (self.adjoint_generic(&sum)?, self.adjoint_generic(x)?, self.adjoint_generic(y)?);
        Ok(s.into_iter().zip(a).zip(b).map(|((s, a), b)| s - a - b).collect())
    }

    /// Requires the algebra to have rank `needed`.
    pub fn require_rank(&self, needed: usize) -> Result<()> {
        let found = self.rank();
        if found != needed {
            return Err(Error::WrongRank { needed, found });
        }
        Ok(())
    }

    /// Checks that `g` maps products to products and the unit to the unit,
    /// i.e. is an algebra homomorphism from `self` to `target`.
    pub fn is_homomorphism(&self, target: &JordanAlgebra, g: &[Vec<Scalar>]) -> Result<bool> {
        let k = self.dim();
        if g.len() != target.dim() || g.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch { expected: target.dim(), got: g.len() });
        }
        if linalg::mat_vec(g, self.unit()) != target.unit() {
            return Ok(false);
        }
        for i in 0..k {
            for j in i..k {
                let (bi, bj) = (basis_vector(k, i), basis_vector(k, j));
                let lhs = linalg::mat_vec(g, &self.mul_unchecked(&bi, &bj));
                let rhs = target.mul_unchecked(&linalg::mat_vec(g, &bi), &linalg::mat_vec(g, &bj));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The certificate `{"jordan_identity", "rank", "sigma"}`.
    pub fn certificate(&self) -> Result<AlgebraCertificate> {
        let mp = self.min_poly()?;
        Ok(AlgebraCertificate {
            jordan_identity: self.identity_check,
            rank: mp.m,
            sigma: mp.sigma.iter().map(MultiPoly::to_json).collect(),
            sigma_text: mp.sigma.iter().map(MultiPoly::to_text).collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraCertificate {
    pub jordan_identity: IdentityCheck,
    pub rank: usize,
    pub sigma: Vec<Vec<crate::poly::TermJson>>,
    pub sigma_text: Vec<String>,
}
