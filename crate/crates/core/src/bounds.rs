//! Castelnuovo-Harris bound functions `pi`, `pibar`, the degree bound and
//! `theta`, all in exact integer or rational arithmetic.

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{binomial, Scalar};

/// `(r, n, delta)` with `rho = floor(delta/(n-1))`,
/// `m = delta - rho(n-1) + 1` and `m' = n - 1 - m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundQuery {
    pub r: u64,
    pub n: u64,
    pub delta: u64,
    pub rho: u64,
    pub m: u64,
    pub m_prime: u64,
}

impl BoundQuery {
    pub fn new(r: u64, n: u64, delta: u64) -> Result<Self> {
        check_rn(r, n)?;
        if delta < n - 1 {
            return Err(Error::InvalidParameter(format!("delta = {delta} is below n - 1 = {}", n - 1)));
        }
        let rho = delta / (n - 1);
        let m = delta - rho * (n - 1) + 1;
        let m_prime = n - 1 - m;
        Ok(Self { r, n, delta, rho, m, m_prime })
    }

    /// The degree `d = delta + r(n-1) + 2` matching `pibar` with `pi`.
    pub fn d(&self) -> u64 {
        self.delta + self.r * (self.n - 1) + 2
    }
}

fn check_rn(r: u64, n: u64) -> Result<()> {
    if r < 1 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    Ok(())
}

fn choose(a: u64, b: u64) -> BigInt {
    binomial(a as i64, b as i64)
}

/// `sum_{s >= 0} C(s + r - 1, s) (d - (s + r)(n - 1) - 1)^+`.
pub fn pi(r: u64, n: u64, d: u64) -> Result<BigInt> {
    check_rn(r, n)?;
    if d < 1 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let sigma_max = (d - 1).div_ceil(n - 1).saturating_sub(r);
    let mut total = BigInt::zero();
    for sigma in 0..=sigma_max {
        let used = (sigma + r) * (n - 1) + 1;
        if used >= d {
            break;
        }
        total += choose(sigma + r - 1, sigma) * BigInt::from(d - used);
    }
    Ok(total)
}

/// `m C(r + rho + 1, r + 1) + m' C(r + rho, r + 1)`.
pub fn pibar(r: u64, n: u64, delta: u64) -> Result<BigInt> {
    let q = BoundQuery::new(r, n, delta)?;
    Ok(BigInt::from(q.m) * choose(r + q.rho + 1, r + 1) + BigInt::from(q.m_prime) * choose(r + q.rho, r + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundIdentity {
    pub r: u64,
    pub n: u64,
    pub delta: u64,
    pub d: u64,
    #[serde(serialize_with = "as_string")]
    pub pibar: BigInt,
    #[serde(serialize_with = "as_string")]
    pub pi: BigInt,
    pub equal: bool,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Evaluates `pibar(r, n, delta)` and `pi(r, n, delta + r(n-1) + 2)`.
pub fn pibar_equals_pi(r: u64, n: u64, delta: u64) -> Result<BoundIdentity> {
    let q = BoundQuery::new(r, n, delta)?;
    let (lhs, rhs) = (pibar(r, n, delta)?, pi(r, n, q.d())?);
    Ok(BoundIdentity { r, n, delta, d: q.d(), equal: lhs == rhs, pibar: lhs, pi: rhs })
}

/// `delta^{r+1} / (n-1)^r`.
pub fn degree_bound(r: u64, n: u64, delta: u64) -> Result<Scalar> {
    BoundQuery::new(r, n, delta)?;
    let num = Pow::pow(BigInt::from(delta), r + 1);
    let den = Pow::pow(BigInt::from(n - 1), r);
    Ok(Scalar::new(num, den))
}

/// `(n - 1 + k)^{r+1} - (n - 1)^r (n + k(r + 1) - 2)`.
pub fn theta(r: u64, n: u64, k: u64) -> Result<BigInt> {
    check_rn(r, n)?;
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let a = Pow::pow(BigInt::from(n - 1 + k), r + 1);
    let b = Pow::pow(BigInt::from(n - 1), r) * BigInt::from(n + k * (r + 1) - 2);
    Ok(a - b)
}

/// Tab-separated `r n delta d pibar pi equal` rows over the given ranges,
/// skipping `delta < n - 1`.
pub fn table_tsv(rs: std::ops::RangeInclusive<u64>, ns: std::ops::RangeInclusive<u64>, deltas: std::ops::RangeInclusive<u64>) -> Result<String> {
    let mut out = String::from("r\tn\tdelta\td\tpibar\tpi\tequal\n");
    for r in rs {
        for n in ns.clone() {
            for delta in deltas.clone() {
                if n < 2 || delta < n - 1 {
                    continue;
                }
                let row = pibar_equals_pi(r, n, delta)?;
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    row.r, row.n, row.delta, row.d, row.pibar, row.pi, row.equal
                ));
            }
        }
    }
    Ok(out)
}
