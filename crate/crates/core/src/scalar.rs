//! Exact scalars: rationals, the ring/field traits the rest of the crate is
//! generic over, and the quadratic extension `Q(sqrt(D))`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

/// Commutative ring with a ring map from the rationals.
///
/// The "like" constructors take the receiver as context: a polynomial zero
/// needs to know its variable count, an element of `Q(sqrt(D))` its `D`.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn lift(&self, c: &Scalar) -> Self;
    fn vanishes(&self) -> bool;
    fn scale(&self, c: &Scalar) -> Self;

    fn one_like(&self) -> Self {
        self.lift(&Scalar::one())
    }
}

pub trait Field: Ring + Div<Output = Self> {
    fn try_inv(&self) -> Option<Self>;
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn lift(&self, c: &Scalar) -> Self {
        c.clone()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
}

impl Field for Scalar {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&n| int(n)).collect()
}

/// Renders `p/q`, omitting `/1`.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// Parses `p`, `p/q`, `-p/q` (an en-dash or U+2212 minus is accepted).
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let cleaned = text.trim().replace(['\u{2212}', '\u{2013}'], "-");
    let bad = || Error::Parse(format!("not a rational: `{text}`"));
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (cleaned.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    Ok(Scalar::new(num, den))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Writes `n = s^2 * core` with `core` square-free (sign carried by `core`).
///
/// Trial division runs up to the cube root of what remains (capped at 2^21),
/// after which the cofactor is a prime, a product of two distinct primes or a
/// prime square; the last case is caught by an exact square-root test. Past
/// the cap (|n| beyond roughly 10^19) a square of two large primes is not
/// detected and the core may keep that square factor; arithmetic in
/// `Q(sqrt(core))` stays correct either way.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero(), "square-free part of zero");
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut rest = n.abs();
    let mut square = BigInt::one();
    let mut core = BigInt::one();
    let mut p: u64 = 2;
    const CAP: u64 = 1 << 21;
    while p <= CAP {
        let pb = BigInt::from(p);
        if &pb * &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            square *= num_traits::pow(pb.clone(), (e / 2) as usize);
            if e % 2 == 1 {
                core *= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        square *= root;
    } else {
        core *= rest;
    }
    (square, sign * core)
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// `a + b sqrt(d)` with `d` square-free and not a perfect square whenever
/// `b != 0`. Elements with `b = 0` compare equal regardless of `d`.
#[derive(Clone, Debug)]
pub struct QuadScalar {
    a: Scalar,
    b: Scalar,
    d: BigInt,
}

impl QuadScalar {
    pub fn new(a: Scalar, b: Scalar, d: BigInt) -> Result<Self> {
        if !b.is_zero() {
            let (_, core) = squarefree_decompose(&d);
            if core != d {
                return Err(Error::InvalidParameter(format!("{d} is not square-free")));
            }
            if is_perfect_square(&d) {
                return Err(Error::InvalidParameter(format!("{d} is a perfect square")));
            }
        }
        Ok(Self { a, b, d })
    }

    pub fn rational(a: Scalar, d: BigInt) -> Self {
        Self { a, b: Scalar::zero(), d }
    }

    /// The element `sqrt(d)` itself.
    pub fn sqrt_of(d: BigInt) -> Result<Self> {
        Self::new(Scalar::zero(), Scalar::one(), d)
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }
    pub fn b(&self) -> &Scalar {
        &self.b
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// `(a + b sqrt d)(a - b sqrt d) = a^2 - d b^2`.
    pub fn norm(&self) -> Scalar {
        &self.a * &self.a - Scalar::from_integer(self.d.clone()) * &self.b * &self.b
    }

    fn joint_d(&self, other: &Self) -> BigInt {
        if self.b.is_zero() {
            other.d.clone()
        } else {
            assert!(
                other.b.is_zero() || self.d == other.d,
                "mixing Q(sqrt {}) and Q(sqrt {})",
                self.d,
                other.d
            );
            self.d.clone()
        }
    }
}

impl PartialEq for QuadScalar {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadScalar {}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_positive() {
                write!(f, "+")?;
            }
        }
        write!(f, "{}*sqrt({})", self.b, self.d)
    }
}

impl Add for QuadScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let d = self.joint_d(&o);
        Self { a: self.a + o.a, b: self.b + o.b, d }
    }
}

impl Sub for QuadScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let d = self.joint_d(&o);
        Self { a: self.a - o.a, b: self.b - o.b, d }
    }
}

impl Mul for QuadScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = self.joint_d(&o);
        let dd = Scalar::from_integer(d.clone());
        Self {
            a: &self.a * &o.a + dd * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
            d,
        }
    }
}

impl Neg for QuadScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Div for QuadScalar {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.try_inv().expect("division by zero in Q(sqrt d)")
    }
}

impl Ring for QuadScalar {
    fn zero_like(&self) -> Self {
        Self::rational(Scalar::zero(), self.d.clone())
    }
    fn lift(&self, c: &Scalar) -> Self {
        Self::rational(c.clone(), self.d.clone())
    }
    fn vanishes(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn scale(&self, c: &Scalar) -> Self {
        Self { a: &self.a * c, b: &self.b * c, d: self.d.clone() }
    }
}

impl Field for QuadScalar {
    fn try_inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self { a: &self.a / &n, b: -&self.b / &n, d: self.d.clone() })
    }
}

/// `C(n, k)` with the convention `C(n, k) = 0` for `k > n` or `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn scalar_to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or(f64::NAN)
}
