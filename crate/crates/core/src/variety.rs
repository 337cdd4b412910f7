//! Cubic parametrizations `P^{r+1} --> P^{2r+3}` of the varieties built from
//! quadro-quadric Cremona maps, scroll models, line images and the secant
//! through a general point.
//!
//! Source coordinates are `(x0, x1, ..., x_{r+1})`; the affine chart is
//! `x0 = 1`, and target coordinates follow the Zorn layout
//! `(x0^3, x0^2 x, x0 phi(x), n(x))`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::config::RunConfig;
use crate::cremona::{CremonaMap, InvolutionCertificate};
use crate::cubic::{on_x_quad, twisted_cubic_through, Translation, ZornPoint};
use crate::error::{Error, Result};
use crate::jordan::JordanAlgebra;
use crate::linalg;
use crate::map::RationalMap;
use crate::poly::{MultiPoly, UniPoly};
use crate::projective::{proj_equal, ProjectivePoint};
use crate::scalar::{format_scalar, is_perfect_square, squarefree_decompose, QuadScalar, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScrollKind {
    S122,
    S113,
}

impl std::str::FromStr for ScrollKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "S122" => Ok(ScrollKind::S122),
            "S113" => Ok(ScrollKind::S113),
            _ => Err(Error::InvalidParameter(format!("unknown scroll `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VarietySource {
    FromCremona(String),
    Scroll(ScrollKind),
    A3Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyParam {
    r: usize,
    map: RationalMap,
    source: VarietySource,
}

#[derive(Clone, Debug)]
pub struct LineImage {
    pub tuple: Vec<UniPoly>,
    pub degree: usize,
    pub span_dim: usize,
}

impl LineImage {
    pub fn tuple_text(&self) -> Vec<String> {
        self.tuple.iter().map(UniPoly::to_text).collect()
    }
}

impl VarietyParam {
    pub fn new(r: usize, components: Vec<MultiPoly>, source: VarietySource) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        if components.len() != 2 * r + 4 {
            return Err(Error::DimensionMismatch { expected: 2 * r + 4, got: components.len() });
        }
        let map = RationalMap::new(components)?;
        if map.degree() != 3 || map.source_vars() != r + 2 {
            return Err(Error::InvalidMap(format!(
                "expected cubics in {} variables, got degree {} in {}",
                r + 2,
                map.degree(),
                map.source_vars()
            )));
        }
        Ok(Self { r, map, source })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn components(&self) -> &[MultiPoly] {
        self.map.components()
    }

    pub fn source(&self) -> &VarietySource {
        &self.source
    }

    pub fn map(&self) -> &RationalMap {
        &self.map
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Vec<Scalar>> {
        self.map.eval(point)
    }

    /// Value at `(1, x)`.
    pub fn eval_affine(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut p = vec![Scalar::one()];
        p.extend_from_slice(x);
        self.eval(&p)
    }

    /// The quadratic map `psi_x` read off the middle block `x0 psi(x)`.
    pub fn psi(&self) -> Result<CremonaMap> {
        let k = self.r + 1;
        let mut comps = Vec::with_capacity(k);
        for c in &self.components()[k + 1..=2 * k] {
            let q = c
                .div_by_var(0)
                .filter(|q| q.degree_in(0) == 0)
                .ok_or_else(|| Error::InvalidMap("middle block is not x0 times a form in x1..".into()))?;
            let mut relabel = vec![0];
            relabel.extend(0..k);
            comps.push(q.relabel(k, &relabel));
        }
        CremonaMap::from_components(comps)
    }

    pub fn line_image(&self, p: &[Scalar], q: &[Scalar]) -> Result<LineImage> {
        let tuple = self.map.restrict_to_line(p, q)?;
        let degree = tuple.iter().filter_map(UniPoly::degree).max().unwrap_or(0);
        let rows: Vec<Vec<Scalar>> = tuple.iter().map(|c| (0..=degree).map(|i| c.coeff(i)).collect()).collect();
        Ok(LineImage { span_dim: linalg::rank(&rows), degree, tuple })
    }

    /// Whether the line through `p` and `q` avoids the indeterminacy locus.
    /// Since `x0^3` is a component, base points lie on `x0 = 0`, and the line
    /// meets that hyperplane in the single point `q0 p - p0 q`.
    pub fn line_misses_base_locus(&self, p: &[Scalar], q: &[Scalar]) -> Result<bool> {
        if p.len() != self.r + 2 || q.len() != self.r + 2 {
            return Err(Error::ArityMismatch { expected: self.r + 2, got: p.len().min(q.len()) });
        }
        if p[0].is_zero() && q[0].is_zero() {
            return Ok(false);
        }
        let u: Vec<Scalar> = p.iter().zip(q).map(|(a, b)| &q[0] * a - &p[0] * b).collect();
        if u.iter().all(Zero::is_zero) {
            return Err(Error::DegenerateLine);
        }
        Ok(self.eval(&u)?.iter().any(|c| !c.is_zero()))
    }

    /// Rank of the images of `3r + 8` seeded points; `2r + 4` means the image
    /// spans the whole target space.
    pub fn nondegeneracy_rank(&self, cfg: &RunConfig) -> Result<usize> {
        let mut sampler = cfg.sampler("nondegeneracy");
        let rows = (0..3 * self.r + 8)
            .map(|_| self.eval(&sampler.vector(self.r + 2)))
            .collect::<Result<Vec<_>>>()?;
        Ok(linalg::rank(&rows))
    }
}

/// `(x0^3, x0^2 x_i, x0 phi_j(x), n(x))`.
pub fn from_cremona(phi: &CremonaMap, cert: &InvolutionCertificate, label: &str) -> Result<VarietyParam> {
    let k = phi.num_vars();
    let shift: Vec<usize> = (1..=k).collect();
    let v = MultiPoly::vars(k + 1);
    let x0 = &v[0];
    let mut comps = vec![x0.pow(3)];
    comps.extend(v[1..].iter().map(|xi| &x0.pow(2) * xi));
    comps.extend(phi.components().iter().map(|f| x0 * &f.relabel(k + 1, &shift)));
    comps.push(cert.n_cubic.relabel(k + 1, &shift));
    VarietyParam::new(k - 1, comps, VarietySource::FromCremona(label.into()))
}

/// The scroll models, homogenized: `x0^3, x0^2 x_i, x0 x1 x_j` and then
/// `x1^2 x2` (S122) or `x1^3` (S113).
pub fn scroll_param(kind: ScrollKind, r: usize) -> Result<VarietyParam> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let v = MultiPoly::vars(r + 2);
    let (x0, x1) = (&v[0], &v[1]);
    let mut comps = vec![x0.pow(3)];
    comps.extend(v[1..].iter().map(|xi| &x0.pow(2) * xi));
    comps.extend(v[1..].iter().map(|xj| &(x0 * x1) * xj));
    comps.push(match kind {
        ScrollKind::S122 => &x1.pow(2) * &v[2],
        ScrollKind::S113 => x1.pow(3),
    });
    VarietyParam::new(r, comps, VarietySource::Scroll(kind))
}

/// `[t^3 : x t^2 : y t^2 : z t^2 : x^2 t : -x y t : (y^2 - x z) t : x^3]`
/// with `t = x0` and `(x, y, z) = (x1, x2, x3)`.
pub fn a3_explicit() -> VarietyParam {
    let v = MultiPoly::vars(4);
    let (t, x, y, z) = (&v[0], &v[1], &v[2], &v[3]);
    let t2 = t.pow(2);
    let comps = vec![
        t.pow(3),
        &t2 * x,
        &t2 * y,
        &t2 * z,
        &x.pow(2) * t,
        -&(&(x * y) * t),
        &(&y.pow(2) - &(x * z)) * t,
        x.pow(3),
    ];
    VarietyParam::new(2, comps, VarietySource::A3Explicit).expect("well-formed cubics")
}

/// Builds the cubic through `nu3(x), nu3(y), nu3(z)` and checks that sampled
/// points of it are images under `v` of the points read off the chart.
pub fn three_point_curve_check(
    v: &VarietyParam,
    j: &JordanAlgebra,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<bool> {
    let curve = twisted_cubic_through(j, x, y, z)?;
    let mut sampler = j.config().sampler("three-point-parameters");
    let mut checked = 0;
    let mut tries = 0;
    while checked < 6 {
        tries += 1;
        if tries > 6 * j.config().retry_limit {
            return Err(Error::RetryExhausted("curve points stay off the chart x0 = 1".into()));
        }
        let p = curve.eval(&(sampler.scalar() / sampler.nonzero_scalar()));
        if p.s.is_zero() {
            continue;
        }
        let u: Vec<Scalar> = p.x.iter().map(|c| c / &p.s).collect();
        if !proj_equal(&v.eval_affine(&u)?, &p.to_vec())? {
            return Ok(false);
        }
        checked += 1;
    }
    Ok(true)
}

/// The secant line through a general point `q`: `q = lambda p1 + mu p2` with
/// `p_i` on `X_J` and `lambda + mu = 1`.
#[derive(Clone, Debug)]
pub struct SecantSolution {
    /// Square-free radicand; `1` when the solution is rational.
    pub d: BigInt,
    pub lambda_mu: Scalar,
    pub lambda: QuadScalar,
    pub mu: QuadScalar,
    pub p1: ProjectivePoint<QuadScalar>,
    pub p2: ProjectivePoint<QuadScalar>,
    /// `q` lies on the line through `p1` and `p2`.
    pub line_check: bool,
    /// `q = lambda p1 + mu p2` in the normalization `s = 1`.
    pub combination_check: bool,
    pub on_x: [bool; 2],
    /// Changing the sign of `sqrt(1 - 4 lambda mu)` swaps `p1` and `p2`; for
    /// irrational solutions this is conjugation in `Q(sqrt D)`.
    pub conjugate: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SecantJson {
    pub d: String,
    pub lambda_mu: String,
    pub lambda: String,
    pub mu: String,
    pub p1: Vec<String>,
    pub p2: Vec<String>,
    pub line_check: bool,
    pub combination_check: bool,
    pub on_x: [bool; 2],
    pub conjugate: bool,
    pub uniqueness: &'static str,
}

impl SecantSolution {
    pub fn passed(&self) -> bool {
        self.line_check && self.combination_check && self.on_x[0] && self.on_x[1] && self.conjugate
    }

    pub fn to_json(&self) -> SecantJson {
        let pts = |p: &ProjectivePoint<QuadScalar>| p.coords().iter().map(|c| c.to_string()).collect();
        SecantJson {
            d: self.d.to_string(),
            lambda_mu: format_scalar(&self.lambda_mu),
            lambda: self.lambda.to_string(),
            mu: self.mu.to_string(),
            p1: pts(&self.p1),
            p2: pts(&self.p2),
            line_check: self.line_check,
            combination_check: self.combination_check,
            on_x: self.on_x,
            conjugate: self.conjugate,
            uniqueness: "derivation-forced",
        }
    }
}

/// Solves for the secant through `q = (1 : q_x : q' : z)`.
///
/// After translating `q_x` away, `q = lambda nu3(x1) + mu nu3(x2)` forces
/// `lambda mu = m / (z^2 + 4m)` with `m = N(q')`, `x2 = -(lambda/mu) x1` and
/// `x1 = ((mu - lambda)/(lambda z)) q'#`. Writing `x_i = c_i v` with
/// `v = q'#` gives `nu3(x_i) = (1, c_i v, c_i^2 m q', c_i^3 m^2)`.
pub fn oadp_solve(j: &JordanAlgebra, q: &ZornPoint<Scalar>) -> Result<SecantSolution> {
    j.require_rank(3)?;
    let k = j.dim();
    if q.k() != k {
        return Err(Error::DimensionMismatch { expected: k, got: q.k() });
    }
    if q.s.is_zero() {
        return Err(Error::DegenerateQ("s = 0".into()));
    }
    let q = q.map(|c| c / &q.s);
    let minus_qx: Vec<Scalar> = q.x.iter().map(|c| -c).collect();
    let moved = Translation::new(j, &minus_qx)?.apply(&q);
    let (qp, z) = (moved.y.clone(), moved.t.clone());
    let sigma = j.sigma_at(&qp)?;
    let m = sigma[2].clone();
    if m.is_zero() {
        return Err(Error::DegenerateQ("m(q') = 0".into()));
    }
    if z.is_zero() {
        return Err(Error::DegenerateQ("z = 0".into()));
    }
    let denom = &z * &z + Scalar::from_integer(4.into()) * &m;
    if denom.is_zero() {
        return Err(Error::DegenerateQ("z^2 + 4 m(q') = 0".into()));
    }
    let lambda_mu = &m / &denom;

    // 1 - 4 lambda mu = num/den and num * den = s^2 D
    let disc = Scalar::one() - Scalar::from_integer(4.into()) * &lambda_mu;
    let (num, den) = (disc.numer().clone(), disc.denom().clone());
    let (root, d, sqrt_disc) = {
        let prod = &num * &den;
        if is_perfect_square(&prod) {
            let s = prod.sqrt();
            (Scalar::new(s, den.clone()), BigInt::one(), None)
        } else {
            let (s, core) = squarefree_decompose(&prod);
            (Scalar::new(s, den.clone()), core.clone(), Some(QuadScalar::sqrt_of(core)?))
        }
    };
    let q_of = |c: Scalar| QuadScalar::rational(c, d.clone());
    // sqrt(1 - 4 lambda mu) = root * sqrt(D)
    let sqrt_r = match &sqrt_disc {
        Some(s) => s.clone() * q_of(root.clone()),
        None => q_of(root.clone()),
    };
    let v = j.adjoint_from_sigma(&qp, &sigma);
    let back = Translation::new(j, &q.x)?;
    // lambda, mu and the two points for a choice of sign of the root
    let solve = |root: &QuadScalar| {
        let half = q_of(Scalar::new(1.into(), 2.into()));
        let lambda = (q_of(Scalar::one()) - root.clone()) * half.clone();
        let mu = (q_of(Scalar::one()) + root.clone()) * half;
        let zq = q_of(z.clone());
        let c1 = (mu.clone() - lambda.clone()) / (lambda.clone() * zq.clone());
        let c2 = (lambda.clone() - mu.clone()) / (mu.clone() * zq);
        let point = |c: &QuadScalar| -> ZornPoint<QuadScalar> {
            let c2 = c.clone() * c.clone();
            let local = ZornPoint {
                s: q_of(Scalar::one()),
                x: v.iter().map(|e| c.clone() * q_of(e.clone())).collect(),
                y: qp.iter().map(|e| c2.clone() * q_of(e * &m)).collect(),
                t: c2 * c.clone() * q_of(&m * &m),
            };
            back.apply(&local)
        };
        (lambda, mu, point(&c1), point(&c2))
    };
    let (lambda, mu, p1, p2) = solve(&sqrt_r);
    let (_, _, p1_swapped, p2_swapped) = solve(&-sqrt_r.clone());
    let mut conjugate = p1_swapped == p2 && p2_swapped == p1;
    if sqrt_disc.is_some() {
        conjugate &= p1.to_vec().iter().map(QuadScalar::conj).collect::<Vec<_>>() == p2.to_vec();
    }

    let qq = q.map(|c| q_of(c.clone()));
    let rows = vec![p1.to_vec(), p2.to_vec()];
    let line_check = linalg::rank(&rows) == 2 && linalg::in_span(&rows, &qq.to_vec());
    let combo: Vec<QuadScalar> = p1
        .to_vec()
        .into_iter()
        .zip(p2.to_vec())
        .map(|(a, b)| lambda.clone() * a + mu.clone() * b)
        .collect();
    let combination_check = combo == qq.to_vec();
    let on_x = [on_x_quad(j, &p1)?, on_x_quad(j, &p2)?];
    Ok(SecantSolution {
        d,
        lambda_mu,
        lambda,
        mu,
        p1: ProjectivePoint::new(p1.to_vec())?,
        p2: ProjectivePoint::new(p2.to_vec())?,
        line_check,
        combination_check,
        on_x,
        conjugate,
    })
}
