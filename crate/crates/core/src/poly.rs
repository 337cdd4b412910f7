//! Sparse multivariate polynomials over the rationals, plus a dense
//! univariate companion used for line restrictions and gcds.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{common_denominator, format_scalar, parse_scalar, Field, Ring, Scalar};

/// Exponent vector, ordered graded-lexicographically (`x1 > x2 > ...`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `degree` in `n` variables, in
/// descending graded-lex order.
pub fn monomials_of_degree(n: usize, degree: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if degree == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, degree, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Sparse polynomial in `num_vars` variables. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(Monomial::one(num_vars), c);
        p
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Scalar::one())
    }

    /// The coordinate function `x_{i+1}` (variables are 0-indexed here).
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars, "variable index {i} out of range");
        let mut p = Self::zero(num_vars);
        p.add_term(Monomial::var(num_vars, i), Scalar::one());
        p
    }

    pub fn vars(num_vars: usize) -> Vec<Self> {
        (0..num_vars).map(|i| Self::var(num_vars, i)).collect()
    }

    pub fn from_terms(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(num_vars);
        for (exps, c) in terms {
            if exps.len() != num_vars {
                return Err(Error::VarCountMismatch { left: num_vars, right: exps.len() });
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    /// Linear form `sum coeffs[i] x_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.0.len(), self.num_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Scalar {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&vec![0; self.num_vars])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// True when every term has total degree `d` (the zero polynomial is
    /// homogeneous of every degree).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.is_homogeneous_of(d),
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch { left: self.num_vars, right: other.num_vars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut acc: std::collections::HashMap<Monomial, Scalar> =
            std::collections::HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                acc.entry(m).and_modify(|v| *v += &c).or_insert(c);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self { num_vars: self.num_vars, terms })
    }

    pub fn scale_by(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        Self {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.num_vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates at a point of any ring containing the rationals.
    pub fn eval<R: Ring>(&self, point: &[R]) -> Result<R> {
        if self.num_vars == 0 {
            return Err(Error::InvalidParameter("polynomial has no variables".into()));
        }
        if point.len() != self.num_vars {
            return Err(Error::ArityMismatch { expected: self.num_vars, got: point.len() });
        }
        Ok(self.eval_unchecked(point))
    }

    fn eval_unchecked<R: Ring>(&self, point: &[R]) -> R {
        let first = point.first().expect("evaluation needs at least one variable");
        // powers[i][e] = point[i]^e, grown lazily
        let mut powers: Vec<Vec<R>> = point.iter().map(|p| vec![p.one_like(), p.clone()]).collect();
        let mut acc = first.zero_like();
        for (m, c) in &self.terms {
            let mut term = first.lift(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().clone() * point[i].clone();
                    powers[i].push(next);
                }
                term = term * powers[i][e as usize].clone();
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitutes `subs[i]` for `x_{i+1}`.
    pub fn compose(&self, subs: &[MultiPoly]) -> Result<MultiPoly> {
        if subs.len() != self.num_vars {
            return Err(Error::ArityMismatch { expected: self.num_vars, got: subs.len() });
        }
        let Some(first) = subs.first() else {
            return Ok(self.clone());
        };
        let n = first.num_vars;
        if let Some(bad) = subs.iter().find(|s| s.num_vars != n) {
            return Err(Error::VarCountMismatch { left: n, right: bad.num_vars });
        }
        Ok(self.eval_unchecked(subs))
    }

    /// Exact division by `x_{var+1}`; `None` if some term lacks the variable.
    pub fn div_by_var(&self, var: usize) -> Option<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[var] == 0 {
                return None;
            }
            let mut e = m.0.clone();
            e[var] -= 1;
            terms.insert(Monomial(e), c.clone());
        }
        Some(MultiPoly { num_vars: self.num_vars, terms })
    }

    /// Sets `x_{var+1} = value` and drops that variable.
    pub fn specialize(&self, var: usize, value: &Scalar) -> MultiPoly {
        let mut out = MultiPoly::zero(self.num_vars - 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e.remove(var);
            let c = c * num_traits::pow(value.clone(), k as usize);
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Keeps only the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-embeds into `new_vars` variables, sending `x_i` to `x_{map[i]}`.
    pub fn relabel(&self, new_vars: usize, map: &[usize]) -> MultiPoly {
        let mut out = MultiPoly::zero(new_vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; new_vars];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn partial(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.num_vars);
        for (m, c) in &self.terms {
            let k = m.0[var];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[var] -= 1;
            out.add_term(Monomial(e), c * Scalar::from_integer(BigInt::from(k)));
        }
        out
    }

    pub fn to_univariate(&self) -> Result<UniPoly> {
        if self.num_vars != 1 {
            return Err(Error::ArityMismatch { expected: 1, got: self.num_vars });
        }
        let deg = self.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[0] as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Renders with explicit `*` and `^`, variables named `x1, x2, ...`.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.num_vars).map(|i| format!("x{i}")).collect();
        self.to_text_with(&names)
    }

    pub fn to_text_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            if factors.is_empty() || !abs.is_one() {
                factors.insert(0, format_scalar(&abs));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(m, c)| TermJson { exp: m.0.clone(), coef: format_scalar(c) })
            .collect()
    }

    pub fn from_json(num_vars: usize, terms: &[TermJson]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|t| Ok((t.exp.clone(), parse_scalar(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(num_vars, parsed)
    }
}

/// One term in the shared wire format `{"exp": [..], "coef": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).expect("polynomial variable counts differ")
            }
        }
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale_by(&-Scalar::one())
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        (&self).neg()
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.num_vars)
    }
    fn lift(&self, c: &Scalar) -> Self {
        MultiPoly::constant(self.num_vars, c.clone())
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn scale(&self, c: &Scalar) -> Self {
        self.scale_by(c)
    }
}

/// Dense univariate polynomial, coefficients from the constant term up.
/// Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::new(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval<F: Field>(&self, t: &F) -> F {
        let mut acc = t.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + t.lift(c);
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.recip();
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scalar content: the positive rational `c` with `self / c` having
    /// coprime integer coefficients and positive leading coefficient.
    pub fn content(&self) -> Scalar {
        tuple_content(std::slice::from_ref(self))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn to_multi(&self) -> MultiPoly {
        let mut p = MultiPoly::zero(1);
        for (i, c) in self.coeffs.iter().enumerate() {
            p.add_term(Monomial(vec![i as u32]), c.clone());
        }
        p
    }

    pub fn to_text(&self) -> String {
        self.to_multi().to_text_with(&["t".to_string()])
    }
}

/// Common scalar factor of a tuple of univariate polynomials: dividing by it
/// leaves integer coefficients with gcd 1 and a positive first nonzero
/// leading coefficient.
pub fn tuple_content(polys: &[UniPoly]) -> Scalar {
    let all: Vec<&Scalar> = polys.iter().flat_map(|p| p.coeffs.iter()).collect();
    if all.is_empty() {
        return Scalar::one();
    }
    let den = common_denominator(all.iter().copied());
    let mut g = BigInt::zero();
    for c in &all {
        let scaled = (*c * Scalar::from_integer(den.clone())).to_integer();
        g = g.gcd(&scaled);
    }
    let mut content = Scalar::new(g, den);
    let first_lead = polys.iter().find_map(|p| p.leading()).unwrap();
    if first_lead.is_negative() {
        content = -content;
    }
    content
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, o: UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, o: UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, o: UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Div for UniPoly {
    type Output = UniPoly;
    /// Exact division; panics on a nonzero remainder.
    fn div(self, o: UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(&o);
        assert!(r.is_zero(), "inexact univariate division");
        q
    }
}

impl Ring for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero()
    }
    fn lift(&self, c: &Scalar) -> Self {
        UniPoly::constant(c.clone())
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn scale(&self, c: &Scalar) -> Self {
        UniPoly::scale(self, c)
    }
}

/// Lagrange interpolation through `(t_i, v_i)`; the nodes must be distinct.
pub fn interpolate<F: Field>(nodes: &[F], values: &[F]) -> Vec<F> {
    assert_eq!(nodes.len(), values.len());
    let n = nodes.len();
    let Some(first) = nodes.first() else {
        return vec![];
    };
    let zero = first.zero_like();
    // Newton divided differences, then expand to monomial coefficients.
    let mut dd: Vec<F> = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = dd[i].clone() - dd[i - 1].clone();
            let den = nodes[i].clone() - nodes[i - j].clone();
            dd[i] = num / den;
        }
    }
    let mut coeffs = vec![zero.clone(); n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (t - nodes[i]) + dd[i]
        let mut next = vec![zero.clone(); n];
        for k in 0..n {
            if k + 1 < n {
                next[k + 1] = next[k + 1].clone() + coeffs[k].clone();
            }
            next[k] = next[k].clone() - coeffs[k].clone() * nodes[i].clone();
        }
        next[0] = next[0].clone() + dd[i].clone();
        coeffs = next;
    }
    coeffs
}

/// Interpolated value at `t = 0`, skipping the expansion.
pub fn interpolate_at_zero<F: Field>(nodes: &[F], values: &[F]) -> F {
    let mut acc = nodes[0].zero_like();
    for (i, (ti, vi)) in nodes.iter().zip(values).enumerate() {
        let mut w = vi.clone();
        for (j, tj) in nodes.iter().enumerate() {
            if i != j {
                w = w * tj.clone() / (tj.clone() - ti.clone());
            }
        }
        acc = acc + w;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn product_of_variables() {
        let p = &x(2, 0) * &x(2, 1);
        assert_eq!(p.to_text(), "x1*x2");
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn adding_zero_is_identity() {
        let p = &(&x(3, 0) * &x(3, 1)) + &x(3, 2).scale_by(&frac(-3, 2));
        assert_eq!(&p + &MultiPoly::zero(3), p);
    }

    #[test]
    fn difference_of_squares() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) - &x(2, 1);
        assert_eq!((&a * &b).to_text(), "x1^2 - x2^2");
    }

    #[test]
    fn mismatched_variable_counts() {
        assert_eq!(
            x(2, 0).try_mul(&x(3, 0)),
            Err(Error::VarCountMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn compose_square_of_sum() {
        let p = x(2, 0).pow(2);
        let q = p.compose(&[&x(2, 0) + &x(2, 1), x(2, 1)]).unwrap();
        assert_eq!(q.to_text(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(p.compose(&MultiPoly::vars(2)).unwrap(), p);
        assert!(p.compose(&[x(2, 0)]).is_err());
    }

    #[test]
    fn ordinary_quadratic_map_composed_with_itself() {
        // Expanded by hand: (x2x3)(x1x3)... collects to x1x2x3 * x_i.
        let v = MultiPoly::vars(3);
        let phi = vec![&v[1] * &v[2], &v[0] * &v[2], &v[0] * &v[1]];
        let cube = &(&v[0] * &v[1]) * &v[2];
        for (i, f) in phi.iter().enumerate() {
            assert_eq!(f.compose(&phi).unwrap(), &cube * &v[i]);
        }
    }

    #[test]
    fn text_rendering() {
        let p = MultiPoly::from_terms(
            2,
            vec![(vec![2, 0], frac(-1, 2)), (vec![0, 1], int(3)), (vec![0, 0], int(-1))],
        )
        .unwrap();
        assert_eq!(p.to_text(), "-1/2*x1^2 + 3*x2 - 1");
        assert_eq!(MultiPoly::zero(2).to_text(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = &x(3, 0).pow(3) - &(&x(3, 1) * &x(3, 2)).scale_by(&frac(2, 7));
        let j = p.to_json();
        assert_eq!(j[0].exp, vec![3, 0, 0]);
        assert_eq!(MultiPoly::from_json(3, &j).unwrap(), p);
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(9, 3).len(), 165);
        let m = monomials_of_degree(2, 2);
        assert_eq!(m[0].exps(), &[2, 0]);
        assert_eq!(m[2].exps(), &[0, 2]);
    }

    #[test]
    fn univariate_gcd() {
        // (t-1)(t-2) and (t-1)(t+3)
        let a = UniPoly::new(vec![int(2), int(-3), int(1)]);
        let b = UniPoly::new(vec![int(-3), int(2), int(1)]);
        assert_eq!(a.gcd(&b), UniPoly::new(vec![int(-1), int(1)]));
        assert_eq!(a.gcd(&UniPoly::constant(int(5))), UniPoly::constant(int(1)));
    }

    #[test]
    fn tuple_content_normalizes() {
        let a = UniPoly::new(vec![frac(1, 2), frac(-3, 2)]);
        let b = UniPoly::new(vec![int(0), int(3)]);
        let c = tuple_content(&[a, b]);
        assert_eq!(c, frac(-1, 2));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let nodes: Vec<Scalar> = (1..=4).map(int).collect();
        let vals: Vec<Scalar> = nodes.iter().map(|t| t * t * t - int(2) * t + int(7)).collect();
        let c = interpolate(&nodes, &vals);
        assert_eq!(c, vec![int(7), int(-2), int(0), int(1)]);
        assert_eq!(interpolate_at_zero(&nodes, &vals), int(7));
    }

    fn small_poly(n: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..5), 0..5).prop_map(
            move |terms| {
                MultiPoly::from_terms(n, terms.into_iter().map(|(e, c)| (e, int(c)))).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(3), b in small_poly(3), c in small_poly(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn product_degree_adds(a in small_poly(3), b in small_poly(3)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }

        #[test]
        fn composition_is_associative(
            p in small_poly(2),
            a in prop::collection::vec(small_poly(2), 2),
            b in prop::collection::vec(small_poly(2), 2),
        ) {
            let lhs = p.compose(&a).unwrap().compose(&b).unwrap();
            let ab: Vec<MultiPoly> = a.iter().map(|ai| ai.compose(&b).unwrap()).collect();
            prop_assert_eq!(lhs, p.compose(&ab).unwrap());
        }

        #[test]
        fn evaluation_is_a_ring_map(a in small_poly(2), b in small_poly(2), u in -5i64..6, v in -5i64..6) {
            let pt = [int(u), int(v)];
            prop_assert_eq!((&a * &b).eval(&pt).unwrap(), a.eval(&pt).unwrap() * b.eval(&pt).unwrap());
        }
    }
}
