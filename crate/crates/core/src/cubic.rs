//! The twisted cubic `X_J` in the projectivized space of Zorn matrices
//! `[s, x; y, t]`, its automorphisms and the cubic curve through three of its
//! points.
//!
//! Coordinates of `P^{2k+1}` are ordered `(s, x_1..x_k, y_1..y_k, t)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::{basis_vector, JordanAlgebra};
use crate::linalg;
use crate::map::primitive_tuple;
use crate::poly::{interpolate, tuple_content, UniPoly};
use crate::projective::proj_equal;
use crate::scalar::{format_scalar, Field, QuadScalar, Ring, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct ZornPoint<F> {
    pub s: F,
    pub x: Vec<F>,
    pub y: Vec<F>,
    pub t: F,
}

impl<F: Ring> ZornPoint<F> {
    pub fn new(s: F, x: Vec<F>, y: Vec<F>, t: F) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::DimensionMismatch { expected: x.len(), got: y.len() });
        }
        Ok(Self { s, x, y, t })
    }

    pub fn k(&self) -> usize {
        self.x.len()
    }

    pub fn to_vec(&self) -> Vec<F> {
        let mut v = Vec::with_capacity(2 * self.k() + 2);
        v.push(self.s.clone());
        v.extend(self.x.iter().cloned());
        v.extend(self.y.iter().cloned());
        v.push(self.t.clone());
        v
    }

    pub fn from_slice(k: usize, v: &[F]) -> Result<Self> {
        if v.len() != 2 * k + 2 {
            return Err(Error::DimensionMismatch { expected: 2 * k + 2, got: v.len() });
        }
        Ok(Self {
            s: v[0].clone(),
            x: v[1..=k].to_vec(),
            y: v[k + 1..=2 * k].to_vec(),
            t: v[2 * k + 1].clone(),
        })
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> ZornPoint<G> {
        ZornPoint {
            s: f(&self.s),
            x: self.x.iter().map(&f).collect(),
            y: self.y.iter().map(&f).collect(),
            t: f(&self.t),
        }
    }
}

impl<F: Field> ZornPoint<F> {
    pub fn proj_eq(&self, other: &Self) -> Result<bool> {
        proj_equal(&self.to_vec(), &other.to_vec())
    }
}

impl ZornPoint<Scalar> {
    /// `0_J = [1, 0; 0, 0]`.
    pub fn zero_j(k: usize) -> Self {
        Self { s: Scalar::one(), x: vec![Scalar::zero(); k], y: vec![Scalar::zero(); k], t: Scalar::zero() }
    }

    /// `inf_J = [0, 0; 0, 1]`.
    pub fn infinity(k: usize) -> Self {
        Self { s: Scalar::zero(), x: vec![Scalar::zero(); k], y: vec![Scalar::zero(); k], t: Scalar::one() }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.to_vec().iter().map(format_scalar).collect()
    }
}

/// `x -> [1 : x : x# : N(x)]`.
pub fn nu3(j: &JordanAlgebra, x: &[Scalar]) -> Result<ZornPoint<Scalar>> {
    j.require_rank(3)?;
    let sigma = j.sigma_at(x)?;
    let sharp = j.adjoint_from_sigma(x, &sigma);
    Ok(ZornPoint { s: Scalar::one(), x: x.to_vec(), y: sharp, t: sigma[2].clone() })
}

/// `I[s, x; y, t] = [t, y; x, s]`.
pub fn inversion_i<F: Clone>(m: &ZornPoint<F>) -> ZornPoint<F> {
    ZornPoint { s: m.t.clone(), x: m.y.clone(), y: m.x.clone(), t: m.s.clone() }
}

/// The translation `T_w`, precomputed as rational linear data so it applies
/// to points over any ring.
#[derive(Clone, Debug)]
pub struct Translation {
    omega: Vec<Scalar>,
    omega_sharp: Vec<Scalar>,
    norm: Scalar,
    // columns w # b_i
    sharp_cols: Vec<Vec<Scalar>>,
    // T(b_i w) and T(b_i w#)
    trace_y: Vec<Scalar>,
    trace_x: Vec<Scalar>,
}

impl Translation {
    pub fn new(j: &JordanAlgebra, omega: &[Scalar]) -> Result<Self> {
        j.require_rank(3)?;
        let k = j.dim();
        if omega.len() != k {
            return Err(Error::DimensionMismatch { expected: k, got: omega.len() });
        }
        let sigma = j.sigma_at(omega)?;
        let omega_sharp = j.adjoint_from_sigma(omega, &sigma);
        let half = Scalar::new(1.into(), 2.into());
        let mut sharp_cols = Vec::with_capacity(k);
        let mut trace_y = Vec::with_capacity(k);
        let mut trace_x = Vec::with_capacity(k);
        for i in 0..k {
            let b = basis_vector(k, i);
            // w # b = ((w + b)# - (w - b)#) / 2
            let plus: Vec<Scalar> = omega.iter().zip(&b).map(|(a, c)| a + c).collect();
            let minus: Vec<Scalar> = omega.iter().zip(&b).map(|(a, c)| a - c).collect();
            let (p, m) = (j.adjoint(&plus)?, j.adjoint(&minus)?);
            sharp_cols.push(p.iter().zip(&m).map(|(a, c)| (a - c) * &half).collect());
            trace_y.push(j.trace(&j.mul(&b, omega)?)?);
            trace_x.push(j.trace(&j.mul(&b, &omega_sharp)?)?);
        }
        Ok(Self { omega: omega.to_vec(), omega_sharp, norm: sigma[2].clone(), sharp_cols, trace_y, trace_x })
    }

    pub fn omega(&self) -> &[Scalar] {
        &self.omega
    }

    /// `[s, x + s w; y + w#x + s w#, t + T(y w) + T(x w#) + s N(w)]`.
    pub fn apply<R: Ring>(&self, m: &ZornPoint<R>) -> ZornPoint<R> {
        let k = self.omega.len();
        let s = &m.s;
        let x: Vec<R> = (0..k).map(|i| m.x[i].clone() + s.scale(&self.omega[i])).collect();
        let y: Vec<R> = (0..k)
            .map(|l| {
                let mut acc = m.y[l].clone() + s.scale(&self.omega_sharp[l]);
                for (i, col) in self.sharp_cols.iter().enumerate() {
                    if !col[l].is_zero() {
                        acc = acc + m.x[i].scale(&col[l]);
                    }
                }
                acc
            })
            .collect();
        let mut t = m.t.clone() + s.scale(&self.norm);
        for i in 0..k {
            t = t + m.y[i].scale(&self.trace_y[i]) + m.x[i].scale(&self.trace_x[i]);
        }
        ZornPoint { s: s.clone(), x, y, t }
    }
}

pub fn translation_t(j: &JordanAlgebra, omega: &[Scalar], m: &ZornPoint<Scalar>) -> Result<ZornPoint<Scalar>> {
    Ok(Translation::new(j, omega)?.apply(m))
}

/// A verified triple `(g, g#, eta)` defining `G_g`.
#[derive(Clone, Debug)]
pub struct StructuralPair {
    g: Vec<Vec<Scalar>>,
    g_sharp: Vec<Vec<Scalar>>,
    eta: Scalar,
}

impl StructuralPair {
    /// Accepts the triple after checking `N(g x) = eta N(x)` and
    /// `g(x^-1) = (g# x)^-1` at seeded points.
    ///
    /// The inverse relation is checked affinely: projectively it cannot tell
    /// `g#` from its nonzero multiples, and only the affine normalization
    /// makes `G_g` preserve `X_J`.
    pub fn verify(j: &JordanAlgebra, g: Vec<Vec<Scalar>>, g_sharp: Vec<Vec<Scalar>>, eta: Scalar) -> Result<Self> {
        j.require_rank(3)?;
        let k = j.dim();
        for mat in [&g, &g_sharp] {
            if mat.len() != k || mat.iter().any(|r| r.len() != k) {
                return Err(Error::DimensionMismatch { expected: k, got: mat.len() });
            }
        }
        let cfg = j.config();
        let mut sampler = cfg.sampler("structural-pair");
        let mut accepted = 0;
        let mut tries = 0;
        while accepted < cfg.samples {
            tries += 1;
            if tries > cfg.samples * cfg.retry_limit {
                return Err(Error::RetryExhausted("no invertible samples for the structural check".into()));
            }
            let x = sampler.vector(k);
            let reject = |reason: &str| Error::StructuralCheckFailed {
                sample: format!("[{}]", x.iter().map(format_scalar).collect::<Vec<_>>().join(", ")),
                reason: reason.into(),
            };
            let nx = j.norm(&x)?;
            let gx = linalg::mat_vec(&g, &x);
            if j.norm(&gx)? != &eta * &nx {
                return Err(reject("N(g x) != eta N(x)"));
            }
            if nx.is_zero() {
                continue;
            }
            let lhs = linalg::mat_vec(&g, &j.invert(&x)?);
            let rhs = j.invert(&linalg::mat_vec(&g_sharp, &x)).map_err(|_| reject("g# x is not invertible"))?;
            if lhs != rhs {
                return Err(reject("g(x^-1) != (g# x)^-1"));
            }
            accepted += 1;
        }
        Ok(Self { g, g_sharp, eta })
    }

    /// `[s, g x; eta g#(y), eta t]`.
    pub fn apply<R: Ring>(&self, m: &ZornPoint<R>) -> ZornPoint<R> {
        let lin = |mat: &[Vec<Scalar>], v: &[R]| -> Vec<R> {
            mat.iter()
                .map(|row| row.iter().zip(v).fold(m.s.zero_like(), |acc, (c, e)| acc + e.scale(c)))
                .collect()
        };
        ZornPoint {
            s: m.s.clone(),
            x: lin(&self.g, &m.x),
            y: lin(&self.g_sharp, &m.y).into_iter().map(|c| c.scale(&self.eta)).collect(),
            t: m.t.scale(&self.eta),
        }
    }

    pub fn eta(&self) -> &Scalar {
        &self.eta
    }
}

#[allow(non_snake_case)]
pub fn structural_G(
    j: &JordanAlgebra,
    g: Vec<Vec<Scalar>>,
    g_sharp: Vec<Vec<Scalar>>,
    eta: Scalar,
    m: &ZornPoint<Scalar>,
) -> Result<ZornPoint<Scalar>> {
    Ok(StructuralPair::verify(j, g, g_sharp, eta)?.apply(m))
}

/// A vector-valued polynomial map of degree at most `degree`, restricted to
/// `a + t b` and recovered by interpolation at `t = 0..=degree`.
pub fn along_line(
    f: impl Fn(&[Scalar]) -> Result<Vec<Scalar>>,
    a: &[Scalar],
    b: &[Scalar],
    degree: usize,
) -> Result<Vec<UniPoly>> {
    let nodes: Vec<Scalar> = (0..=degree).map(|i| Scalar::from_integer((i as i64).into())).collect();
    let values = nodes
        .iter()
        .map(|t| {
            let p: Vec<Scalar> = a.iter().zip(b).map(|(u, v)| u + v * t).collect();
            f(&p)
        })
        .collect::<Result<Vec<_>>>()?;
    let width = values[0].len();
    Ok((0..width)
        .map(|c| {
            let column: Vec<Scalar> = values.iter().map(|v| v[c].clone()).collect();
            UniPoly::new(interpolate(&nodes, &column))
        })
        .collect())
}

/// `x#` and `N(x)` for `x` with coordinates in `Q(sqrt D)`.
pub fn sharp_and_norm_quad(j: &JordanAlgebra, x: &[QuadScalar]) -> Result<(Vec<QuadScalar>, QuadScalar)> {
    let lift = |v: Scalar, d: &BigInt| QuadScalar::rational(v, d.clone());
    let Some(d) = x.iter().find(|c| !c.is_rational()).map(|c| c.d().clone()) else {
        let a: Vec<Scalar> = x.iter().map(|c| c.a().clone()).collect();
        let d = x.first().map_or_else(BigInt::one, |c| c.d().clone());
        let sigma = j.sigma_at(&a)?;
        let sharp = j.adjoint_from_sigma(&a, &sigma);
        return Ok((sharp.into_iter().map(|c| lift(c, &d)).collect(), lift(sigma[2].clone(), &d)));
    };
    let a: Vec<Scalar> = x.iter().map(|c| c.a().clone()).collect();
    let b: Vec<Scalar> = x.iter().map(|c| c.b().clone()).collect();
    let root = QuadScalar::sqrt_of(d)?;
    let sharp = along_line(|p| j.adjoint(p), &a, &b, 2)?;
    let norm = along_line(|p| Ok(vec![j.norm(p)?]), &a, &b, 3)?;
    Ok((sharp.iter().map(|p| p.eval(&root)).collect(), norm[0].eval(&root)))
}

fn membership<F: Field>(
    j: &JordanAlgebra,
    m: &ZornPoint<F>,
    sharp_norm: impl Fn(&[F]) -> Result<(Vec<F>, F)>,
) -> Result<bool> {
    let k = j.dim();
    if m.k() != k {
        return Err(Error::DimensionMismatch { expected: k, got: m.k() });
    }
    let check = |p: &ZornPoint<F>| -> Result<bool> {
        let inv = p.s.try_inv().expect("s is nonzero");
        let x: Vec<F> = p.x.iter().map(|c| c.clone() * inv.clone()).collect();
        let (sharp, norm) = sharp_norm(&x)?;
        let y_ok = p.y.iter().zip(&sharp).all(|(y, h)| (y.clone() * inv.clone() - h.clone()).vanishes());
        Ok(y_ok && (p.t.clone() * inv - norm).vanishes())
    };
    if m.to_vec().iter().all(Ring::vanishes) {
        return Err(Error::ZeroVector);
    }
    if !m.s.vanishes() {
        return check(m);
    }
    if !m.t.vanishes() {
        return check(&inversion_i(m));
    }
    // I T_w I is an automorphism that generally moves s off zero
    let mut sampler = j.config().sampler("x-membership");
    for _ in 0..j.config().retry_limit {
        let tr = Translation::new(j, &sampler.vector(k))?;
        let moved = inversion_i(&tr.apply(&inversion_i(m)));
        if !moved.s.vanishes() {
            return check(&moved);
        }
    }
    Err(Error::RetryExhausted("no translation moved the point off s = 0".into()))
}

/// Membership in the closure of `nu3(J)`: `y s = x#` and `t s^2 = N(x)`
/// after moving the point into the chart `s != 0`.
pub fn on_x(j: &JordanAlgebra, m: &ZornPoint<Scalar>) -> Result<bool> {
    j.require_rank(3)?;
    membership(j, m, |x| {
        let sigma = j.sigma_at(x)?;
        Ok((j.adjoint_from_sigma(x, &sigma), sigma[2].clone()))
    })
}

pub fn on_x_quad(j: &JordanAlgebra, m: &ZornPoint<QuadScalar>) -> Result<bool> {
    j.require_rank(3)?;
    membership(j, m, |x| sharp_and_norm_quad(j, x))
}

/// A curve `t -> [c_0(t) : ... : c_{2k+1}(t)]` in `P^{2k+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveParam {
    k: usize,
    components: Vec<UniPoly>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveJson {
    pub degree: usize,
    /// Ascending coefficient lists, one per coordinate.
    pub components: Vec<Vec<String>>,
    pub text: Vec<String>,
}

impl CurveParam {
    pub fn new(k: usize, components: Vec<UniPoly>) -> Result<Self> {
        if components.len() != 2 * k + 2 {
            return Err(Error::DimensionMismatch { expected: 2 * k + 2, got: components.len() });
        }
        if components.iter().all(UniPoly::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { k, components })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn components(&self) -> &[UniPoly] {
        &self.components
    }

    pub fn degree(&self) -> usize {
        self.components.iter().filter_map(UniPoly::degree).max().unwrap_or(0)
    }

    pub fn is_primitive(&self) -> bool {
        crate::map::tuple_gcd(&self.components).degree() == Some(0)
    }

    pub fn eval(&self, t: &Scalar) -> ZornPoint<Scalar> {
        let v: Vec<Scalar> = self.components.iter().map(|c| c.eval(t)).collect();
        ZornPoint::from_slice(self.k, &v).expect("length checked on construction")
    }

    /// The point at `t = infinity`: the top-degree coefficients.
    pub fn at_infinity(&self) -> ZornPoint<Scalar> {
        let d = self.degree();
        let v: Vec<Scalar> = self.components.iter().map(|c| c.coeff(d)).collect();
        ZornPoint::from_slice(self.k, &v).expect("length checked on construction")
    }

    /// Row `i` holds the coefficients of `t^i`.
    pub fn coefficient_rows(&self) -> Vec<Vec<Scalar>> {
        (0..=self.degree()).map(|i| self.components.iter().map(|c| c.coeff(i)).collect()).collect()
    }

    /// Dimension of the span of the curve points at the given parameters.
    pub fn span_dim(&self, params: &[Scalar]) -> usize {
        let rows: Vec<Vec<Scalar>> = params.iter().map(|t| self.eval(t).to_vec()).collect();
        linalg::rank(&rows)
    }

    /// Whether `p` lies on the curve, for a rational normal cubic: the
    /// coordinates `a` of `p` in the coefficient basis must satisfy
    /// `rank [[a0, a1, a2], [a1, a2, a3]] <= 1`.
    pub fn contains(&self, p: &[Scalar]) -> Result<bool> {
        let rows = self.coefficient_rows();
        if self.degree() != 3 || linalg::rank(&rows) != 4 {
            return Err(Error::InvalidParameter("curve is not a rational normal cubic".into()));
        }
        if p.len() != 2 * self.k + 2 {
            return Err(Error::DimensionMismatch { expected: 2 * self.k + 2, got: p.len() });
        }
        let Some(a) = linalg::express(&rows, p) else {
            return Ok(false);
        };
        let minors = [
            &a[0] * &a[2] - &a[1] * &a[1],
            &a[0] * &a[3] - &a[1] * &a[2],
            &a[1] * &a[3] - &a[2] * &a[2],
        ];
        Ok(minors.iter().all(Zero::is_zero) && a.iter().any(|c| !c.is_zero()))
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson {
            degree: self.degree(),
            components: self.components.iter().map(|c| c.coeffs().iter().map(format_scalar).collect()).collect(),
            text: self.components.iter().map(UniPoly::to_text).collect(),
        }
    }
}

fn genericity(j: &JordanAlgebra, v: &[Scalar], name: &str) -> Result<Vec<Scalar>> {
    j.invert(v).map_err(|e| match e {
        Error::NotInvertible => Error::GenericityFailure(name.into()),
        other => other,
    })
}

/// The cubic through `nu3(y)` at `t = 0`, `nu3(z)` at `t = 1` and `nu3(x)` at
/// `t = infinity`: `t -> nu3(x + w(t)^-1)` with
/// `w(t) = (y-x)^-1 + t ((z-x)^-1 - (y-x)^-1)`, written as
/// `T_x [N(w) : w# : w : 1]` with integer coefficients.
pub fn twisted_cubic_through(j: &JordanAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<CurveParam> {
    j.require_rank(3)?;
    let k = j.dim();
    for v in [x, y, z] {
        if v.len() != k {
            return Err(Error::DimensionMismatch { expected: k, got: v.len() });
        }
    }
    let diff = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> { a.iter().zip(b).map(|(u, v)| u - v).collect() };
    let y1 = genericity(j, &diff(y, x), "y1 = y - x")?;
    let z1 = genericity(j, &diff(z, x), "z1 = z - x")?;
    let z2 = diff(&z1, &y1);
    if j.norm(&z2)?.is_zero() {
        return Err(Error::GenericityFailure("z2 = (z - x)^-1 - (y - x)^-1".into()));
    }
    let w: Vec<UniPoly> = y1.iter().zip(&z2).map(|(a, b)| UniPoly::new(vec![a.clone(), b.clone()])).collect();
    let sharp = along_line(|p| j.adjoint(p), &y1, &z2, 2)?;
    let norm = along_line(|p| Ok(vec![j.norm(p)?]), &y1, &z2, 3)?.remove(0);
    let m = ZornPoint { s: norm, x: sharp, y: w, t: UniPoly::constant(Scalar::one()) };
    let curve = Translation::new(j, x)?.apply(&m).to_vec();
    let curve = primitive_tuple(curve);
    let content = tuple_content(&curve);
    let curve = curve.into_iter().map(|c| c.scale(&content.recip())).collect();
    CurveParam::new(k, curve)
}

/// Checks on one curve from [`twisted_cubic_through`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveCertificate {
    pub degree: usize,
    pub primitive: bool,
    pub span_dim: usize,
    pub through_y_at_0: bool,
    pub through_z_at_1: bool,
    pub through_x_at_infinity: bool,
    pub sampled_points_on_x: bool,
}

impl CurveCertificate {
    pub fn passed(&self) -> bool {
        self.degree == 3
            && self.primitive
            && self.span_dim == 4
            && self.through_y_at_0
            && self.through_z_at_1
            && self.through_x_at_infinity
            && self.sampled_points_on_x
    }
}

/// Certifies `curve` against the triple it was built from, sampling six
/// parameters for the span and membership checks.
pub fn certify_curve(
    j: &JordanAlgebra,
    curve: &CurveParam,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<CurveCertificate> {
    let mut sampler = j.config().sampler("curve-parameters");
    let mut params: Vec<Scalar> = Vec::new();
    while params.len() < 6 {
        let t = sampler.scalar() / sampler.nonzero_scalar();
        if !params.contains(&t) {
            params.push(t);
        }
    }
    let mut on = true;
    for t in &params {
        on &= on_x(j, &curve.eval(t))?;
    }
    Ok(CurveCertificate {
        degree: curve.degree(),
        primitive: curve.is_primitive(),
        span_dim: curve.span_dim(&params),
        through_y_at_0: curve.eval(&Scalar::zero()).proj_eq(&nu3(j, y)?)?,
        through_z_at_1: curve.eval(&Scalar::one()).proj_eq(&nu3(j, z)?)?,
        through_x_at_infinity: curve.at_infinity().proj_eq(&nu3(j, x)?)?,
        sampled_points_on_x: on,
    })
}
