//! Ways of building new algebras: symmetrization, products, spin factors and
//! Hermitian 3x3 matrices over composition algebras.

use num_traits::Zero;

use super::spec::{basis_vector, AlgebraSpec};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::{Ring, Scalar};

fn zero() -> Scalar {
    Scalar::zero()
}

fn half() -> Scalar {
    Scalar::new(1.into(), 2.into())
}

/// `A+`: the product `x * y = (xy + yx) / 2` on an associative algebra.
pub fn from_associative(a: &AlgebraSpec) -> Result<AlgebraSpec> {
    a.check_associative()?;
    a.check_unit()?;
    let k = a.dim();
    let table = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    a.table()[i][j]
                        .iter()
                        .zip(&a.table()[j][i])
                        .map(|(p, q)| (p + q) * half())
                        .collect()
                })
                .collect()
        })
        .collect();
    AlgebraSpec::new(a.unit().to_vec(), table)
}

/// The opposite algebra, `x . y = y x`.
pub fn opposite(a: &AlgebraSpec) -> AlgebraSpec {
    let k = a.dim();
    let table = (0..k).map(|i| (0..k).map(|j| a.table()[j][i].clone()).collect()).collect();
    AlgebraSpec::new(a.unit().to_vec(), table).expect("shape is preserved")
}

/// `J1 x J2` with the coordinates of `J1` first.
pub fn direct_product(a: &AlgebraSpec, b: &AlgebraSpec) -> AlgebraSpec {
    let (ka, kb) = (a.dim(), b.dim());
    let k = ka + kb;
    let mut table = vec![vec![vec![zero(); k]; k]; k];
    for i in 0..ka {
        for j in 0..ka {
            table[i][j][..ka].clone_from_slice(&a.table()[i][j]);
        }
    }
    for i in 0..kb {
        for j in 0..kb {
            table[ka + i][ka + j][ka..].clone_from_slice(&b.table()[i][j]);
        }
    }
    let unit = a.unit().iter().chain(b.unit()).cloned().collect();
    AlgebraSpec::new(unit, table).expect("block table has the right shape")
}

/// `Q + W` with `(l, y)(l', y') = (l l' - B(y, y'), l y' + l' y)`.
pub fn spin_factor(b: &[Vec<Scalar>]) -> Result<AlgebraSpec> {
    let w = b.len();
    if b.iter().any(|r| r.len() != w) {
        return Err(Error::DimensionMismatch { expected: w, got: b.len() });
    }
    for i in 0..w {
        for j in 0..i {
            if b[i][j] != b[j][i] {
                return Err(Error::InvalidParameter("bilinear form is not symmetric".into()));
            }
        }
    }
    let k = w + 1;
    let mut table = vec![vec![vec![zero(); k]; k]; k];
    table[0][0] = basis_vector(k, 0);
    for i in 1..k {
        table[0][i] = basis_vector(k, i);
        table[i][0] = basis_vector(k, i);
        for j in 1..k {
            table[i][j][0] = -b[i - 1][j - 1].clone();
        }
    }
    AlgebraSpec::new(basis_vector(k, 0), table)
}

/// `n x n` identity matrix.
pub fn identity_form(n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|i| basis_vector(n, i)).collect()
}

/// A unital algebra with a linear involution, meant to satisfy
/// `x xbar = n(x) 1`. The unit is the first basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionAlgebra {
    spec: AlgebraSpec,
    conj: Vec<Vec<Scalar>>,
}

impl CompositionAlgebra {
    /// Checks the composition property on a symbolic element.
    pub fn new(spec: AlgebraSpec, conj: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = spec.dim();
        if ![1, 2, 4, 8].contains(&n) {
            return Err(Error::Composition(format!("dimension {n} is not 1, 2, 4 or 8")));
        }
        if spec.unit() != basis_vector(n, 0).as_slice() {
            return Err(Error::Composition("the unit must be the first basis vector".into()));
        }
        spec.check_unit()?;
        let c = Self { spec, conj };
        c.check_composition()?;
        Ok(c)
    }

    /// Split Cayley-Dickson doubles of `Q`: `Q`, `Q x Q`, `M_2(Q)` and the
    /// split octonions for `dim` = 1, 2, 4, 8.
    pub fn split(dim: usize) -> Result<Self> {
        let steps = match dim {
            1 => 0,
            2 => 1,
            4 => 2,
            8 => 3,
            _ => return Err(Error::Composition(format!("no split algebra of dimension {dim}"))),
        };
        let mut table = vec![vec![vec![Scalar::from_integer(1.into())]]];
        let mut conj = vec![Scalar::from_integer(1.into())];
        for _ in 0..steps {
            (table, conj) = double(&table, &conj, &Scalar::from_integer(1.into()));
        }
        let n = conj.len();
        let spec = AlgebraSpec::new(basis_vector(n, 0), table)?;
        let conj = (0..n)
            .map(|i| {
                let mut row = vec![zero(); n];
                row[i] = conj[i].clone();
                row
            })
            .collect();
        Self::new(spec, conj)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn conjugate<R: Ring>(&self, x: &[R]) -> Vec<R> {
        self.conj
            .iter()
            .map(|row| {
                row.iter().zip(x).fold(x[0].zero_like(), |acc, (c, v)| {
                    if c.is_zero() { acc } else { acc + v.scale(c) }
                })
            })
            .collect()
    }

    pub fn mul<R: Ring>(&self, x: &[R], y: &[R]) -> Vec<R> {
        self.spec.product(x, y).expect("dimensions agree")
    }

    fn check_composition(&self) -> Result<()> {
        let n = self.dim();
        let x = MultiPoly::vars(n);
        let xbar = self.conjugate(&x);
        for (label, prod) in [("x xbar", self.mul(&x, &xbar)), ("xbar x", self.mul(&xbar, &x))] {
            if prod[1..].iter().any(|p| !p.is_zero()) {
                return Err(Error::Composition(format!("{label} is not a multiple of the unit")));
            }
        }
        let twice = self.conjugate(&xbar);
        if twice != x {
            return Err(Error::Composition("conjugation is not an involution".into()));
        }
        Ok(())
    }
}

type Table = Vec<Vec<Vec<Scalar>>>;

/// `(a, b)(c, d) = (ac + g dbar b, da + b cbar)`, `(a, b)bar = (abar, -b)`.
fn double(table: &Table, conj: &[Scalar], gamma: &Scalar) -> (Table, Vec<Scalar>) {
    let n = conj.len();
    let mul = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![zero(); n];
        for i in 0..n {
            for j in 0..n {
                let p = &x[i] * &y[j];
                if p.is_zero() {
                    continue;
                }
                for l in 0..n {
                    out[l] += &p * &table[i][j][l];
                }
            }
        }
        out
    };
    let bar = |x: &[Scalar]| -> Vec<Scalar> { x.iter().zip(conj).map(|(a, c)| a * c).collect() };
    let m = 2 * n;
    let mut out = vec![vec![vec![zero(); m]; m]; m];
    for i in 0..m {
        for j in 0..m {
            let u = basis_vector(m, i);
            let v = basis_vector(m, j);
            let (a, b) = u.split_at(n);
            let (c, d) = v.split_at(n);
            let first: Vec<Scalar> = mul(a, c)
                .into_iter()
                .zip(mul(&bar(d), b))
                .map(|(p, q)| p + gamma * q)
                .collect();
            let second: Vec<Scalar> =
                mul(d, a).into_iter().zip(mul(b, &bar(c))).map(|(p, q)| p + q).collect();
            out[i][j] = first.into_iter().chain(second).collect();
        }
    }
    let new_conj = conj.iter().cloned().chain((0..n).map(|_| -Scalar::from_integer(1.into()))).collect();
    (out, new_conj)
}

/// `H_3(C)`: Hermitian 3x3 matrices over `C` with `M * N = (MN + NM) / 2`.
///
/// Coordinates are `(a1, a2, a3, c1, c2, c3)` for the matrix
/// `[[a1, c3, c2bar], [c3bar, a2, c1], [c2, c1bar, a3]]`, each `c_i` a block
/// of `dim C` entries.
pub fn hermitian_h3(c: &CompositionAlgebra) -> Result<AlgebraSpec> {
    let n = c.dim();
    let k = 3 + 3 * n;
    let to_matrix = |v: &[Scalar]| -> Vec<Vec<Vec<Scalar>>> {
        let scalar = |a: &Scalar| {
            let mut e = vec![zero(); n];
            e[0] = a.clone();
            e
        };
        let block = |i: usize| v[3 + i * n..3 + (i + 1) * n].to_vec();
        let (c1, c2, c3) = (block(0), block(1), block(2));
        vec![
            vec![scalar(&v[0]), c3.clone(), c.conjugate(&c2)],
            vec![c.conjugate(&c3), scalar(&v[1]), c1.clone()],
            vec![c2, c.conjugate(&c1), scalar(&v[2])],
        ]
    };
    let matmul = |x: &[Vec<Vec<Scalar>>], y: &[Vec<Vec<Scalar>>]| -> Vec<Vec<Vec<Scalar>>> {
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        (0..3).fold(vec![zero(); n], |acc, l| {
                            acc.iter().zip(c.mul(&x[i][l], &y[l][j])).map(|(a, b)| a + b).collect()
                        })
                    })
                    .collect()
            })
            .collect()
    };
    let mut table = vec![vec![vec![zero(); k]; k]; k];
    for i in 0..k {
        for j in i..k {
            let (u, v) = (to_matrix(&basis_vector(k, i)), to_matrix(&basis_vector(k, j)));
            let (uv, vu) = (matmul(&u, &v), matmul(&v, &u));
            let p: Vec<Vec<Vec<Scalar>>> = (0..3)
                .map(|r| {
                    (0..3)
                        .map(|s| uv[r][s].iter().zip(&vu[r][s]).map(|(a, b)| (a + b) * half()).collect())
                        .collect()
                })
                .collect();
            let mut coords = vec![zero(); k];
            for d in 0..3 {
                if p[d][d][1..].iter().any(|x| !x.is_zero()) {
                    return Err(Error::Composition("diagonal entry is not a scalar".into()));
                }
                coords[d] = p[d][d][0].clone();
            }
            for (slot, (r, s)) in [(1usize, 2usize), (2, 0), (0, 1)].into_iter().enumerate() {
                if c.conjugate(&p[r][s]) != p[s][r] {
                    return Err(Error::Composition("product is not Hermitian".into()));
                }
                coords[3 + slot * n..3 + (slot + 1) * n].clone_from_slice(&p[r][s]);
            }
            table[i][j] = coords.clone();
            table[j][i] = coords;
        }
    }
    let mut unit = vec![zero(); k];
    for u in unit.iter_mut().take(3) {
        *u = Scalar::from_integer(1.into());
    }
    AlgebraSpec::new(unit, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ints;

    #[test]
    fn split_algebras_have_the_composition_property() {
        for n in [1, 2, 4, 8] {
            let c = CompositionAlgebra::split(n).unwrap();
            assert_eq!(c.dim(), n);
        }
        assert!(CompositionAlgebra::split(3).is_err());
    }

    #[test]
    fn split_octonions_are_not_associative() {
        let c = CompositionAlgebra::split(8).unwrap();
        assert!(c.spec().check_associative().is_err());
        let q = CompositionAlgebra::split(4).unwrap();
        assert!(q.spec().check_associative().is_ok());
    }

    #[test]
    fn broken_conjugation_is_rejected() {
        let q = CompositionAlgebra::split(2).unwrap();
        let bad = CompositionAlgebra::new(q.spec().clone(), identity_form(2));
        assert!(matches!(bad, Err(Error::Composition(_))));
    }

    #[test]
    fn hermitian_dimensions() {
        for (n, k) in [(1, 6), (2, 9), (4, 15), (8, 27)] {
            let c = CompositionAlgebra::split(n).unwrap();
            assert_eq!(hermitian_h3(&c).unwrap().dim(), k);
        }
    }

    #[test]
    fn spin_factor_product() {
        let s = spin_factor(&identity_form(2)).unwrap();
        // (1, 2, 3)(4, 5, 6) = (4 - 28, 1*5 + 4*2, 1*6 + 4*3)
        let p = s.product(&ints(&[1, 2, 3]), &ints(&[4, 5, 6])).unwrap();
        assert_eq!(p, ints(&[-24, 13, 18]));
    }

    #[test]
    fn symmetrizing_a_commutative_algebra_changes_nothing() {
        let a = spin_factor(&identity_form(1)).unwrap();
        assert!(a.check_associative().is_ok());
        assert_eq!(from_associative(&a).unwrap(), a);
    }
}
