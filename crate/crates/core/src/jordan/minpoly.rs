//! The generic minimum polynomial `x^m - s1(x) x^{m-1} + ... + (-1)^m sm(x) e`.
//!
//! Pointwise values come from the Krylov relation at generic points and from
//! interpolation along a line elsewhere. The symbolic forms are recovered
//! from values at the lattice points `|beta| <= m` by mixed finite
//! differences: for a form `p` of degree `d` and `|alpha| = d`,
//! `Delta^alpha p(0) = alpha! * coeff_alpha(p)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::algebra::JordanAlgebra;
use crate::error::{Error, Result};
use crate::poly::{interpolate_at_zero, monomials_of_degree, MultiPoly};
use crate::scalar::{binomial, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericMinPoly {
    pub m: usize,
    /// `sigma[i]` is the form of degree `i + 1`.
    pub sigma: Vec<MultiPoly>,
}

impl GenericMinPoly {
    pub fn trace_form(&self) -> &MultiPoly {
        &self.sigma[0]
    }

    pub fn norm_form(&self) -> &MultiPoly {
        self.sigma.last().unwrap()
    }
}

fn sigma_from_relation(a: &[Scalar], m: usize) -> Vec<Scalar> {
    (1..=m)
        .map(|i| if i % 2 == 1 { a[m - i].clone() } else { -a[m - i].clone() })
        .collect()
}

pub(crate) fn sigma_at(j: &JordanAlgebra, x: &[Scalar]) -> Result<Vec<Scalar>> {
    let m = j.rank();
    let (deg, a) = j.krylov_relation(x);
    if deg == m {
        return Ok(sigma_from_relation(&a, m));
    }
    if deg > m {
        return Err(Error::Interpolation(format!(
            "local rank {deg} exceeds the estimated rank {m}"
        )));
    }
    sigma_on_line(j, x, m)
}

pub(crate) fn sigma_on_line(j: &JordanAlgebra, x: &[Scalar], m: usize) -> Result<Vec<Scalar>> {
    let cfg = j.config();
    for attempt in 0..cfg.retry_limit {
        let g = cfg.sampler(&format!("sigma-direction-{attempt}")).nonzero_vector(j.dim());
        let mut nodes = Vec::with_capacity(m + 1);
        let mut values: Vec<Vec<Scalar>> = Vec::with_capacity(m + 1);
        let mut t = 1i64;
        while nodes.len() <= m && t <= (m + 1 + cfg.retry_limit) as i64 {
            let ts = Scalar::from_integer(BigInt::from(t));
            let p: Vec<Scalar> = x.iter().zip(&g).map(|(a, b)| a + b * &ts).collect();
            let (deg, a) = j.krylov_relation(&p);
            if deg == m {
                nodes.push(ts);
                values.push(sigma_from_relation(&a, m));
            } else if deg > m {
                return Err(Error::Interpolation(format!(
                    "local rank {deg} exceeds the estimated rank {m}"
                )));
            }
            t += 1;
        }
        if nodes.len() == m + 1 {
            return Ok((0..m)
                .map(|i| {
                    let column: Vec<Scalar> = values.iter().map(|v| v[i].clone()).collect();
                    interpolate_at_zero(&nodes, &column)
                })
                .collect());
        }
    }
    Err(Error::RetryExhausted("no generic line through the point".into()))
}

pub(crate) fn compute(j: &JordanAlgebra) -> Result<GenericMinPoly> {
    let m = j.rank();
    let k = j.dim();
    let lattice: Vec<Vec<u32>> = (0..=m as u32)
        .flat_map(|d| monomials_of_degree(k, d))
        .map(|mono| mono.exps().to_vec())
        .collect();
    let values: Vec<Vec<Scalar>> = lattice
        .par_iter()
        .map(|beta| {
            let point: Vec<Scalar> = beta.iter().map(|&b| Scalar::from_integer(b.into())).collect();
            sigma_at(j, &point)
        })
        .collect::<Result<_>>()?;
    let index: HashMap<&[u32], usize> =
        lattice.iter().enumerate().map(|(i, b)| (b.as_slice(), i)).collect();

    let mut sigma = Vec::with_capacity(m);
    for d in 1..=m {
        let mut poly = MultiPoly::zero(k);
        for alpha in monomials_of_degree(k, d as u32) {
            let c = mixed_difference(alpha.exps(), |beta| &values[index[beta]][d - 1]);
            poly.add_term(alpha, c);
        }
        sigma.push(poly);
    }
    let mp = GenericMinPoly { m, sigma };
    certify(j, &mp)?;
    Ok(mp)
}

/// `(1/alpha!) sum_{beta <= alpha} (-1)^{|alpha - beta|} prod C(alpha_i, beta_i) p(beta)`.
fn mixed_difference<'a>(alpha: &[u32], p: impl Fn(&[u32]) -> &'a Scalar) -> Scalar {
    let support: Vec<usize> = (0..alpha.len()).filter(|&i| alpha[i] > 0).collect();
    let total: u32 = alpha.iter().sum();
    let mut beta = vec![0u32; alpha.len()];
    let mut acc = Scalar::zero();
    loop {
        let mut weight = BigInt::from(1);
        for &i in &support {
            weight *= binomial(alpha[i] as i64, beta[i] as i64);
        }
        let used: u32 = beta.iter().sum();
        if (total - used) % 2 == 1 {
            weight = -weight;
        }
        acc += p(&beta) * Scalar::from_integer(weight);
        // next beta in the box below alpha
        let mut pos = 0;
        loop {
            if pos == support.len() {
                let fact: BigInt = alpha.iter().map(|&a| factorial(a)).product();
                return acc / Scalar::from_integer(fact);
            }
            let i = support[pos];
            if beta[i] < alpha[i] {
                beta[i] += 1;
                break;
            }
            beta[i] = 0;
            pos += 1;
        }
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Substitutes the forms back into the minimum polynomial symbolically.
fn certify(j: &JordanAlgebra, mp: &GenericMinPoly) -> Result<()> {
    let k = j.dim();
    for (i, s) in mp.sigma.iter().enumerate() {
        if !s.is_homogeneous_of(i as u32 + 1) {
            return Err(Error::Interpolation(format!("sigma_{} is not homogeneous", i + 1)));
        }
    }
    let x = MultiPoly::vars(k);
    let residual = min_poly_residual(j, &x, &mp.sigma);
    if residual.iter().any(|r| !r.is_zero()) {
        return Err(Error::Interpolation("interpolated forms fail the minimum polynomial".into()));
    }
    Ok(())
}

/// `x^m - s1 x^{m-1} + ... + (-1)^m sm e` for given sigma values.
pub fn min_poly_residual<R: crate::scalar::Ring>(
    j: &JordanAlgebra,
    x: &[R],
    sigma: &[R],
) -> Vec<R> {
    let m = sigma.len();
    let pw = j.powers(x, m);
    let mut acc = pw[m].clone();
    for i in 1..=m {
        let c = if i % 2 == 1 { -sigma[i - 1].clone() } else { sigma[i - 1].clone() };
        for (a, p) in acc.iter_mut().zip(&pw[m - i]) {
            *a = a.clone() + c.clone() * p.clone();
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::{int, ints};

    #[test]
    fn mixed_difference_recovers_coefficients() {
        let p = parse_poly(3, "2*x1^2*x2 - x2^3 + 5*x1*x2*x3").unwrap();
        let eval = |b: &[u32]| {
            let pt: Vec<Scalar> = b.iter().map(|&v| int(v as i64)).collect();
            p.eval(&pt).unwrap()
        };
        let cache: HashMap<Vec<u32>, Scalar> = (0..=3)
            .flat_map(|d| monomials_of_degree(3, d))
            .map(|m| (m.exps().to_vec(), eval(m.exps())))
            .collect();
        for alpha in monomials_of_degree(3, 3) {
            let c = mixed_difference(alpha.exps(), |b| &cache[b]);
            assert_eq!(c, p.coefficient(alpha.exps()), "{:?}", alpha.exps());
        }
    }

    #[test]
    fn relation_signs() {
        // x^3 = 6x^2 - 11x + 6 e  =>  sigma = (6, 11, 6)
        let s = sigma_from_relation(&ints(&[6, -11, 6]), 3);
        assert_eq!(s, ints(&[6, 11, 6]));
    }
}
