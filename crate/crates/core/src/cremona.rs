//! Quadro-quadric Cremona maps and the involution identities
//! `ell(phi(phi(x))) = n(x) x` and `phi(ell(phi(y))) = m(y) y`.

use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::jordan::JordanAlgebra;
use crate::map::{tuple_gcd, RationalMap};
use crate::poly::{MultiPoly, TermJson};
use crate::scalar::{format_scalar, Scalar};

/// A tuple of quadratic forms in as many variables as components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CremonaMap {
    map: RationalMap,
}

impl CremonaMap {
    pub fn new(map: RationalMap) -> Result<Self> {
        if map.degree() != 2 {
            return Err(Error::InvalidMap(format!("expected quadratic forms, got degree {}", map.degree())));
        }
        if map.target_len() != map.source_vars() {
            return Err(Error::DimensionMismatch { expected: map.source_vars(), got: map.target_len() });
        }
        Ok(Self { map })
    }

    pub fn from_components(components: Vec<MultiPoly>) -> Result<Self> {
        Self::new(RationalMap::new(components)?)
    }

    pub fn map(&self) -> &RationalMap {
        &self.map
    }

    pub fn components(&self) -> &[MultiPoly] {
        self.map.components()
    }

    pub fn num_vars(&self) -> usize {
        self.map.source_vars()
    }
}

/// `x -> x#` for a rank-3 algebra.
pub fn adjoint_cremona(j: &JordanAlgebra) -> Result<CremonaMap> {
    j.require_rank(3)?;
    CremonaMap::new(j.adjoint_form()?.clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionCertificate {
    pub ell: Vec<Vec<Scalar>>,
    pub n_cubic: MultiPoly,
    pub m_cubic: MultiPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub ell: Vec<Vec<String>>,
    pub n: String,
    pub m: String,
    pub n_terms: Vec<TermJson>,
    pub m_terms: Vec<TermJson>,
}

impl InvolutionCertificate {
    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            ell: self.ell.iter().map(|r| r.iter().map(format_scalar).collect()).collect(),
            n: self.n_cubic.to_text(),
            m: self.m_cubic.to_text(),
            n_terms: self.n_cubic.to_json(),
            m_terms: self.m_cubic.to_json(),
        }
    }
}

pub fn identity_matrix(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| (0..n).map(|j| Scalar::from_integer(((i == j) as i64).into())).collect())
        .collect()
}

/// Writes `comp` as `c(x) x` for a single form `c`, after checking
/// `comp_i x_j = comp_j x_i` for all pairs.
fn scalar_multiple_of_identity(comp: &[MultiPoly], what: &str) -> Result<MultiPoly> {
    let n = comp.len();
    let x = MultiPoly::vars(n);
    for i in 0..n {
        for j in i + 1..n {
            if &comp[i] * &x[j] != &comp[j] * &x[i] {
                return Err(Error::NotProportional(format!("{what}: components {} and {} disagree", i + 1, j + 1)));
            }
        }
    }
    let i = comp
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::NotProportional(format!("{what} vanishes identically")))?;
    comp[i]
        .div_by_var(i)
        .ok_or_else(|| Error::NotProportional(format!("{what}: component {} is not divisible by x{}", i + 1, i + 1)))
}

/// Checks `ell(phi(phi(x))) = n(x) x` and extracts `n`, then the companion
/// cubic `m`. `ell` defaults to the identity.
pub fn verify_involution(phi: &CremonaMap, ell: Option<&[Vec<Scalar>]>) -> Result<InvolutionCertificate> {
    let ell = match ell {
        Some(e) => e.to_vec(),
        None => identity_matrix(phi.num_vars()),
    };
    let twice = phi.map.compose(&phi.map)?.then_linear(&ell)?;
    let n_cubic = scalar_multiple_of_identity(twice.components(), "ell(phi(phi(x)))")?;
    let mut cert = InvolutionCertificate { ell, n_cubic, m_cubic: MultiPoly::zero(phi.num_vars()) };
    cert.m_cubic = companion_cubic(phi, &cert)?;
    Ok(cert)
}

/// The cubic `m` with `phi(ell(phi(y))) = m(y) y`, verified against
/// `m(phi(x)) = n(x)^2`.
pub fn companion_cubic(phi: &CremonaMap, cert: &InvolutionCertificate) -> Result<MultiPoly> {
    let inner = phi.map.then_linear(&cert.ell)?;
    let twice = phi.map.compose(&inner)?;
    let m = scalar_multiple_of_identity(twice.components(), "phi(ell(phi(y)))")?;
    if m.compose(phi.components())? != cert.n_cubic.pow(2) {
        return Err(Error::NotProportional("m(phi(x)) differs from n(x)^2".into()));
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidegreeReport {
    pub degree: u32,
    pub lines: usize,
    /// Smallest degree of the gcd of the restricted components over the
    /// sampled lines; a common factor of `phi` divides every such gcd.
    pub common_factor_degree: usize,
    pub common_factor: bool,
    /// All components share a linear factor: the map is a projective
    /// transformation times that factor.
    pub scroll_case: bool,
    pub involution: bool,
    pub type_22: bool,
}

/// Monte Carlo common-factor test on `cfg.gcd_lines` seeded lines.
///
/// A factor shared by all components shows up on every line. A spurious
/// gcd needs every sampled line to hit a special locus, so with entries in
/// `[-B, B]` the false-positive rate is tiny per line and vanishing for five.
pub fn bidegree_certificate(phi: &CremonaMap, cfg: &RunConfig) -> Result<BidegreeReport> {
    let n = phi.num_vars();
    let mut sampler = cfg.sampler("bidegree-lines");
    let mut min_gcd = usize::MAX;
    let mut lines = 0;
    while lines < cfg.gcd_lines {
        let (p, q) = (sampler.vector(n), sampler.vector(n));
        let restricted = match phi.map.restrict_raw(&p, &q) {
            Ok(r) if !crate::projective::proportional(&p, &q) => r,
            _ => continue,
        };
        if restricted.iter().all(|c| c.is_zero()) {
            continue;
        }
        min_gcd = min_gcd.min(tuple_gcd(&restricted).degree().unwrap_or(0));
        lines += 1;
    }
    let involution = verify_involution(phi, None).is_ok();
    Ok(BidegreeReport {
        degree: phi.map.degree(),
        lines,
        common_factor_degree: min_gcd,
        common_factor: min_gcd > 0,
        scroll_case: min_gcd == 1,
        involution,
        type_22: min_gcd == 0 && involution,
    })
}

/// Smallest gcd degree of `x -> x#` restricted to seeded lines, computed
/// from pointwise adjoints so it needs no symbolic forms.
pub fn adjoint_common_factor_degree(j: &JordanAlgebra, cfg: &RunConfig) -> Result<usize> {
    j.require_rank(3)?;
    let k = j.dim();
    let mut sampler = cfg.sampler("bidegree-lines");
    let mut min_gcd = usize::MAX;
    for _ in 0..cfg.gcd_lines {
        let (p, q) = (sampler.vector(k), sampler.nonzero_vector(k));
        let restricted = crate::cubic::along_line(|v| j.adjoint(v), &p, &q, 2)?;
        min_gcd = min_gcd.min(tuple_gcd(&restricted).degree().unwrap_or(0));
    }
    Ok(min_gcd)
}

/// `n` vanishes at every given base point of `phi` (where all components
/// vanish), as forced by `ell(phi(phi(u))) = n(u) u`.
pub fn base_points_consistent(phi: &CremonaMap, cert: &InvolutionCertificate, points: &[Vec<Scalar>]) -> Result<bool> {
    for u in points {
        let image = phi.map.eval(u)?;
        if image.iter().all(num_traits::Zero::is_zero) && !num_traits::Zero::is_zero(&cert.n_cubic.eval(u)?) {
            return Ok(false);
        }
    }
    Ok(true)
}
