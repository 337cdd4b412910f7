//! Named algebras: the rank-three associative algebras of dimension 3 and 4
//! and their Jordan symmetrizations, spin factors, products and the four
//! Hermitian 3x3 matrix algebras, with closed-form adjoints and norms where
//! they are known.
//!
//! Basis conventions (coordinates `x1, x2, ...` in this order):
//!
//! | name | basis |
//! |------|-------|
//! | A1 | the three idempotents of `Q x Q x Q` |
//! | A2 | unit of the `Q` factor, then `1, X` of `Q[X]/(X^2)` |
//! | A3 | `1, X, X^2` of `Q[X]/(X^3)` |
//! | A6 | unit of the `Q` factor, then `1, X, Y` of `Q[X,Y]/(X,Y)^2` |
//! | A7 | `1, X, Y, XY` of `Q[X,Y]/(X^2,Y^2)` |
//! | A8 | `1, X, Y, X^2` of `Q[X,Y]/(X^3,XY,Y^2)` |
//! | A13 | unit of the `Q` factor, then `E11, E12, E22` (upper triangular 2x2) |
//! | A14, A15 | `E11+E22, E33, E21, E31` (the matrices `[[a,0,0],[c,a,0],[d,0,b]]`) |
//! | A18(l), A19 | `1, X, Y, XY` and `1, X, Y, YX` |
//! | Spin(r) | `1, w1, ..., w_{r-1}` with `B` the identity |
//! | CxJprime(r) | unit of `Q`, then the basis of `Spin(r)` |
//! | H3* | diagonal `a1, a2, a3`, then the off-diagonal blocks `c1, c2, c3` |

use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::jordan::{
    direct_product, from_associative, hermitian_h3, identity_form, opposite, spin_factor,
    AlgebraSpec, CompositionAlgebra, JordanAlgebra,
};
use crate::parse::{parse_poly, parse_polys};
use crate::poly::MultiPoly;
use crate::scalar::{frac, int, ints, parse_scalar, Scalar};

#[derive(Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: JordanAlgebra,
    pub expected_rank: usize,
    pub reference_adjoint: Option<Vec<MultiPoly>>,
    pub reference_norm: Option<MultiPoly>,
    pub origin: String,
}

impl CatalogEntry {
    pub fn spec(&self) -> &AlgebraSpec {
        self.algebra.spec()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogSummary {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub origin: String,
}

/// Entries of the default listing, in order.
pub const DEFAULT_NAMES: &[&str] = &[
    "Q", "A1", "A2", "A3", "A6", "A7", "A8", "A13", "A14", "A15", "A18(2)", "A19", "Jstar",
    "CxJprime(3)", "Spin(3)", "H3R", "H3C", "H3H", "H3O",
];

/// Names of every rank-3 entry in the default listing.
pub fn cubic_names() -> Vec<&'static str> {
    DEFAULT_NAMES.iter().copied().filter(|n| !matches!(*n, "Q" | "Spin(3)")).collect()
}

struct Raw {
    spec: AlgebraSpec,
    rank: usize,
    adjoint: Option<Vec<&'static str>>,
    adjoint_owned: Option<Vec<String>>,
    norm: Option<String>,
    origin: String,
}

impl Raw {
    fn new(spec: AlgebraSpec, rank: usize, origin: impl Into<String>) -> Self {
        Self { spec, rank, adjoint: None, adjoint_owned: None, norm: None, origin: origin.into() }
    }

    fn forms(mut self, adjoint: &[&'static str], norm: &str) -> Self {
        self.adjoint = Some(adjoint.to_vec());
        self.norm = Some(norm.to_string());
        self
    }
}

fn split_call(name: &str) -> Option<(&str, &str)> {
    let open = name.find('(')?;
    let inner = name[open + 1..].strip_suffix(')')?;
    Some((&name[..open], inner.trim()))
}

fn parse_size(arg: &str, min: usize, family: &str) -> Result<usize> {
    let r: usize = arg
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("{family} needs an integer size, got `{arg}`")))?;
    if r < min {
        return Err(Error::InvalidParameter(format!("{family} needs size at least {min}")));
    }
    Ok(r)
}

fn commutative(unit: &[i64], product: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>) -> AlgebraSpec {
    AlgebraSpec::from_product_fn(ints(unit), product).expect("catalog tables are well formed")
}

fn raw(name: &str) -> Result<Raw> {
    let q = || commutative(&[1], |x, y| vec![&x[0] * &y[0]]);
    let spin = |r: usize| spin_factor(&identity_form(r - 1));
    if let Some((family, arg)) = split_call(name) {
        return match family {
            "A18" => {
                let l = parse_scalar(arg)?;
                if l == int(1) || l == int(-1) {
                    return Err(Error::InvalidParameter(format!(
                        "A18 needs lambda different from 1 and -1, got {arg}"
                    )));
                }
                let lc = l.clone();
                let a = commutative(&[1, 0, 0, 0], move |x, y| {
                    vec![
                        &x[0] * &y[0],
                        &x[0] * &y[1] + &x[1] * &y[0],
                        &x[0] * &y[2] + &x[2] * &y[0],
                        &x[0] * &y[3] + &x[3] * &y[0] + &x[1] * &y[2] + &lc * &x[2] * &y[1],
                    ]
                });
                Ok(Raw::new(
                    from_associative(&a)?,
                    3,
                    format!("Jordan symmetrization of Q<X,Y>/(X^2, Y^2, YX - {l} XY), isomorphic to A7"),
                ))
            }
            "Spin" => {
                let r = parse_size(arg, 2, "Spin")?;
                let y: Vec<String> = (2..=r).map(|i| format!("x{i}^2")).collect();
                let adj: Vec<String> =
                    std::iter::once("x1".to_string()).chain((2..=r).map(|i| format!("-x{i}"))).collect();
                Ok(Raw {
                    adjoint_owned: Some(adj),
                    norm: Some(format!("x1^2 + {}", y.join(" + "))),
                    ..Raw::new(spin(r)?, 2, format!("spin factor of dimension {r} with B the identity"))
                })
            }
            "CxJprime" => {
                let r = parse_size(arg, 2, "CxJprime")?;
                let squares: Vec<String> = (2..=r + 1).map(|i| format!("x{i}^2")).collect();
                let sum = squares.join(" + ");
                let adj: Vec<String> = std::iter::once(sum.clone())
                    .chain(std::iter::once("x1*x2".to_string()))
                    .chain((3..=r + 1).map(|i| format!("-x1*x{i}")))
                    .collect();
                Ok(Raw {
                    adjoint_owned: Some(adj),
                    norm: Some(format!("x1*({sum})")),
                    ..Raw::new(
                        direct_product(&q(), &spin(r)?),
                        3,
                        format!("Q times the spin factor of dimension {r}; the twisted cubic is P1 x Q^{r}"),
                    )
                })
            }
            _ => Err(Error::UnknownAlgebra(name.to_string())),
        };
    }
    let h3 = |n: usize| -> Result<AlgebraSpec> { hermitian_h3(&CompositionAlgebra::split(n)?) };
    let entry = match name {
        "Q" => Raw::new(q(), 1, "the rationals").forms(&[], "x1"),
        "A1" => Raw::new(
            commutative(&[1, 1, 1], |x, y| (0..3).map(|i| &x[i] * &y[i]).collect()),
            3,
            "Q x Q x Q; the twisted cubic is the Segre threefold P1 x P1 x P1 in P7",
        )
        .forms(&["x2*x3", "x1*x3", "x1*x2"], "x1*x2*x3"),
        "A2" => Raw::new(
            commutative(&[1, 1, 0], |x, y| {
                vec![&x[0] * &y[0], &x[1] * &y[1], &x[1] * &y[2] + &x[2] * &y[1]]
            }),
            3,
            "Q x Q[X]/(X^2); the twisted cubic is P1 x S02",
        )
        .forms(&["x2^2", "x1*x2", "-x1*x3"], "x1*x2^2"),
        "A3" => Raw::new(
            commutative(&[1, 0, 0], |x, y| {
                vec![
                    &x[0] * &y[0],
                    &x[0] * &y[1] + &x[1] * &y[0],
                    &x[0] * &y[2] + &x[2] * &y[0] + &x[1] * &y[1],
                ]
            }),
            3,
            "Q[X]/(X^3), commutative associative of dimension 3",
        )
        .forms(&["x1^2", "-x1*x2", "x2^2 - x1*x3"], "x1^3"),
        "A6" => Raw::new(
            commutative(&[1, 1, 0, 0], |x, y| {
                vec![
                    &x[0] * &y[0],
                    &x[1] * &y[1],
                    &x[1] * &y[2] + &x[2] * &y[1],
                    &x[1] * &y[3] + &x[3] * &y[1],
                ]
            }),
            3,
            "Q x Q[X,Y]/(X,Y)^2; the twisted cubic is P1 x S002",
        )
        .forms(&["x2^2", "x1*x2", "-x1*x3", "-x1*x4"], "x1*x2^2"),
        "A7" => Raw::new(
            commutative(&[1, 0, 0, 0], |x, y| {
                vec![
                    &x[0] * &y[0],
                    &x[0] * &y[1] + &x[1] * &y[0],
                    &x[0] * &y[2] + &x[2] * &y[0],
                    &x[0] * &y[3] + &x[3] * &y[0] + &x[1] * &y[2] + &x[2] * &y[1],
                ]
            }),
            3,
            "Q[X,Y]/(X^2,Y^2), commutative associative of dimension 4",
        )
        .forms(&["x1^2", "-x1*x2", "-x1*x3", "2*x2*x3 - x1*x4"], "x1^3"),
        "A8" => Raw::new(
            commutative(&[1, 0, 0, 0], |x, y| {
                vec![
                    &x[0] * &y[0],
                    &x[0] * &y[1] + &x[1] * &y[0],
                    &x[0] * &y[2] + &x[2] * &y[0],
                    &x[0] * &y[3] + &x[3] * &y[0] + &x[1] * &y[1],
                ]
            }),
            3,
            "Q[X,Y]/(X^3,XY,Y^2), commutative associative of dimension 4",
        )
        .forms(&["x1^2", "-x1*x2", "-x1*x3", "x2^2 - x1*x4"], "x1^3"),
        "A13" => Raw::new(
            from_associative(&a13())?,
            3,
            "Jordan symmetrization of Q x (upper triangular 2x2); the twisted cubic is P1 x S011",
        )
        .forms(&["x2*x4", "x1*x4", "-x1*x3", "x1*x2"], "x1*x2*x4"),
        "A14" => Raw::new(
            from_associative(&a14())?,
            3,
            "Jordan symmetrization of the matrices [[a,0,0],[c,a,0],[d,0,b]]",
        )
        .forms(&["x1*x2", "x1^2", "-x2*x3", "-x1*x4"], "x1^2*x2"),
        "A15" => Raw::new(
            from_associative(&opposite(&a14()))?,
            3,
            "Jordan symmetrization of the opposite of A14; equal to A14 as a Jordan algebra",
        )
        .forms(&["x1*x2", "x1^2", "-x2*x3", "-x1*x4"], "x1^2*x2"),
        "A19" => Raw::new(
            from_associative(&a19())?,
            3,
            "Jordan symmetrization of Q<X,Y>/(Y^2, X^2 + YX, XY + YX), isomorphic to A8",
        ),
        "Jstar" => Raw::new(
            AlgebraSpec::from_product_fn(ints(&[-1, 1, 0, 0]), jstar_product)?,
            3,
            "four-dimensional cubic Jordan algebra not of the form A+",
        )
        .forms(&["x1*x2", "x1^2", "x4^2 - x2*x3", "x1*x4"], "x1^2*x2"),
        "H3R" => Raw::new(h3(1)?, 3, "symmetric 3x3 matrices; the Lagrangian Grassmannian LG(3,6) in P13"),
        "H3C" => Raw::new(h3(2)?, 3, "Hermitian 3x3 over split Q x Q, i.e. M3; the Grassmannian G(3,6) in P19"),
        "H3H" => Raw::new(h3(4)?, 3, "Hermitian 3x3 over split quaternions; the spinor variety S6 in P31"),
        "H3O" => Raw::new(h3(8)?, 3, "Hermitian 3x3 over split octonions; the 27-dimensional E7-variety in P55"),
        _ => return Err(Error::UnknownAlgebra(name.to_string())),
    };
    Ok(entry)
}

/// `Q x` upper triangular 2x2, basis `u, E11, E12, E22`.
fn a13() -> AlgebraSpec {
    AlgebraSpec::from_product_fn(ints(&[1, 1, 0, 1]), |x, y| {
        vec![
            &x[0] * &y[0],
            &x[1] * &y[1],
            &x[1] * &y[2] + &x[2] * &y[3],
            &x[3] * &y[3],
        ]
    })
    .expect("well formed")
}

/// `[[a,0,0],[c,a,0],[d,0,b]]` with coordinates `(a, b, c, d)`.
fn a14() -> AlgebraSpec {
    AlgebraSpec::from_product_fn(ints(&[1, 1, 0, 0]), |x, y| {
        vec![
            &x[0] * &y[0],
            &x[1] * &y[1],
            &x[2] * &y[0] + &x[0] * &y[2],
            &x[3] * &y[0] + &x[1] * &y[3],
        ]
    })
    .expect("well formed")
}

/// `Q<X,Y>/(Y^2, X^2 + YX, XY + YX)`, basis `1, X, Y, YX`.
fn a19() -> AlgebraSpec {
    AlgebraSpec::from_product_fn(ints(&[1, 0, 0, 0]), |x, y| {
        vec![
            &x[0] * &y[0],
            &x[0] * &y[1] + &x[1] * &y[0],
            &x[0] * &y[2] + &x[2] * &y[0],
            &x[0] * &y[3] + &x[3] * &y[0] - &x[1] * &y[1] - &x[1] * &y[2] + &x[2] * &y[1],
        ]
    })
    .expect("well formed")
}

fn jstar_product(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    vec![
        -(&x[0] * &y[0]),
        &x[1] * &y[1],
        &x[3] * &y[3] - &x[0] * &y[2] - &x[2] * &y[0],
        (&x[1] * &y[3] + &x[3] * &y[1] - &x[0] * &y[3] - &x[3] * &y[0]) * frac(1, 2),
    ]
}

/// The associative (not Jordan) table behind a name, for the entries that
/// come from an associative algebra.
pub fn associative_source(name: &str) -> Option<AlgebraSpec> {
    match name {
        "A13" => Some(a13()),
        "A14" => Some(a14()),
        "A15" => Some(opposite(&a14())),
        "A19" => Some(a19()),
        _ => None,
    }
}

/// The structure constants behind a name, without validation.
pub fn catalog_spec(name: &str) -> Result<AlgebraSpec> {
    Ok(raw(name)?.spec)
}

pub fn catalog_get(name: &str, config: &RunConfig) -> Result<CatalogEntry> {
    let raw = raw(name)?;
    let k = raw.spec.dim();
    let reference_adjoint = match (raw.adjoint, raw.adjoint_owned) {
        (Some(a), _) if !a.is_empty() => Some(parse_polys(k, &a)?),
        (_, Some(a)) => {
            let refs: Vec<&str> = a.iter().map(String::as_str).collect();
            Some(parse_polys(k, &refs)?)
        }
        _ => None,
    };
    let reference_norm = raw.norm.as_deref().map(|n| parse_poly(k, n)).transpose()?;
    let algebra = JordanAlgebra::validate(raw.spec, config)?;
    Ok(CatalogEntry {
        name: name.to_string(),
        algebra,
        expected_rank: raw.rank,
        reference_adjoint,
        reference_norm,
        origin: raw.origin,
    })
}

pub fn catalog_list() -> Vec<CatalogSummary> {
    DEFAULT_NAMES
        .iter()
        .map(|name| {
            let r = raw(name).expect("default names are valid");
            CatalogSummary { name: name.to_string(), dim: r.spec.dim(), rank: r.rank, origin: r.origin }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_and_invalid_names() {
        assert!(matches!(catalog_spec("A5"), Err(Error::UnknownAlgebra(_))));
        assert!(matches!(catalog_spec("A18(1)"), Err(Error::InvalidParameter(_))));
        assert!(matches!(catalog_spec("Spin(x)"), Err(Error::InvalidParameter(_))));
        assert!(catalog_spec("A18(-1/3)").is_ok());
    }

    #[test]
    fn listing_is_deterministic() {
        let list = catalog_list();
        assert_eq!(list, catalog_list());
        let find = |n: &str| list.iter().find(|e| e.name == n).unwrap().clone();
        assert_eq!((find("A3").dim, find("A3").rank), (3, 3));
        assert_eq!((find("H3O").dim, find("H3O").rank), (27, 3));
        assert_eq!((find("H3R").dim, find("H3R").rank), (6, 3));
        assert_eq!(find("Spin(3)").rank, 2);
    }

    #[test]
    fn jstar_table_matches_the_displayed_product() {
        let spec = catalog_spec("Jstar").unwrap();
        let x = ints(&[1, 2, 3, 4]);
        let y = ints(&[-2, 5, 1, 3]);
        // (-x1y1, x2y2, x4y4 - x1y3 - x3y1, (x2y4 + x4y2 - x1y4 - x4y1)/2)
        let expected = vec![int(2), int(10), int(12 - 1 + 6), frac(6 + 20 - 3 + 8, 2)];
        assert_eq!(spec.product(&x, &y).unwrap(), expected);
    }

    #[test]
    fn jstar_unit_solves_the_unit_equations() {
        let spec = catalog_spec("Jstar").unwrap();
        let e = AlgebraSpec::solve_unit(spec.table()).unwrap();
        assert_eq!(e, ints(&[-1, 1, 0, 0]));
        assert_eq!(spec.product(&e, &e).unwrap(), e);
    }
}
