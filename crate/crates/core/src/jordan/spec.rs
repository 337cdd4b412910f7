use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::MultiPoly;
use crate::scalar::{format_scalar, parse_scalar, Ring, Scalar};

/// Structure constants of a unital algebra: `b_i b_j = sum_l table[i][j][l] b_l`.
///
/// The table need not be commutative here; `JordanAlgebra::validate` and
/// `from_associative` decide what is required of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    dim: usize,
    unit: Vec<Scalar>,
    table: Vec<Vec<Vec<Scalar>>>,
}

impl AlgebraSpec {
    pub fn new(unit: Vec<Scalar>, table: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = unit.len();
        if dim == 0 {
            return Err(Error::InvalidParameter("algebra of dimension 0".into()));
        }
        if table.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: table.len() });
        }
        for row in &table {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            if let Some(bad) = row.iter().find(|v| v.len() != dim) {
                return Err(Error::DimensionMismatch { expected: dim, got: bad.len() });
            }
        }
        Ok(Self { dim, unit, table })
    }

    /// Builds the table by applying a bilinear product to pairs of basis
    /// vectors.
    pub fn from_product_fn(
        unit: Vec<Scalar>,
        product: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
    ) -> Result<Self> {
        let dim = unit.len();
        let basis: Vec<Vec<Scalar>> = (0..dim).map(|i| basis_vector(dim, i)).collect();
        let table = (0..dim)
            .map(|i| (0..dim).map(|j| product(&basis[i], &basis[j])).collect())
            .collect();
        Self::new(unit, table)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn table(&self) -> &[Vec<Vec<Scalar>>] {
        &self.table
    }

    pub fn structure_constant(&self, i: usize, j: usize, l: usize) -> &Scalar {
        &self.table[i][j][l]
    }

    /// The bilinear product, without assuming commutativity.
    pub fn product<R: Ring>(&self, x: &[R], y: &[R]) -> Result<Vec<R>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
            }
        }
        let zero = x[0].zero_like();
        let mut out = vec![zero; self.dim];
        for i in 0..self.dim {
            if x[i].vanishes() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].vanishes() {
                    continue;
                }
                let entry = &self.table[i][j];
                if entry.iter().all(num_traits::Zero::is_zero) {
                    continue;
                }
                let p = x[i].clone() * y[j].clone();
                for (l, c) in entry.iter().enumerate() {
                    if !num_traits::Zero::is_zero(c) {
                        out[l] = out[l].clone() + p.scale(c);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn check_commutative(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.table[i][j] != self.table[j][i] {
                    return Err(Error::NotCommutative { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(())
    }

    /// `e b_i = b_i = b_i e` for every basis element.
    pub fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let b = basis_vector(self.dim, i);
            let left = self.product(&self.unit, &b)?;
            let right = self.product(&b, &self.unit)?;
            if left != b || right != b {
                return Err(Error::UnitLaw { i: i + 1 });
            }
        }
        Ok(())
    }

    /// Associativity on basis triples, which suffices by trilinearity.
    pub fn check_associative(&self) -> Result<()> {
        let basis: Vec<Vec<Scalar>> = (0..self.dim).map(|i| basis_vector(self.dim, i)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.product(&basis[i], &basis[j])?;
                for k in 0..self.dim {
                    let jk = self.product(&basis[j], &basis[k])?;
                    if self.product(&ij, &basis[k])? != self.product(&basis[i], &jk)? {
                        return Err(Error::NotAssociative { i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    /// Solves `e b_i = b_i` for `e`; `None` if no left unit exists.
    pub fn solve_unit(table: &[Vec<Vec<Scalar>>]) -> Option<Vec<Scalar>> {
        let k = table.len();
        // unknown e: sum_a e_a table[a][i][l] = delta_il for all i, l
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..k {
            for l in 0..k {
                rows.push((0..k).map(|a| table[a][i][l].clone()).collect::<Vec<_>>());
                rhs.push(if i == l { Scalar::from_integer(1.into()) } else { Scalar::from_integer(0.into()) });
            }
        }
        linalg::solve(&rows, &rhs)
    }

    /// The product of two generic elements, in `2k` variables.
    pub fn generic_product(&self) -> Vec<MultiPoly> {
        let n = 2 * self.dim;
        let vars = MultiPoly::vars(n);
        self.product(&vars[..self.dim], &vars[self.dim..]).expect("dimensions agree")
    }

    pub fn to_json(&self) -> SpecJson {
        SpecJson {
            dim: self.dim,
            unit: self.unit.iter().map(format_scalar).collect(),
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(format_scalar).collect()).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &SpecJson) -> Result<Self> {
        let parse_vec = |v: &Vec<String>| v.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>>>();
        let unit = parse_vec(&json.unit)?;
        if unit.len() != json.dim {
            return Err(Error::DimensionMismatch { expected: json.dim, got: unit.len() });
        }
        let table = json
            .table
            .iter()
            .map(|row| row.iter().map(parse_vec).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(unit, table)
    }
}

/// Wire format `{"dim": k, "unit": [..], "table": [[[..]]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub dim: usize,
    pub unit: Vec<String>,
    pub table: Vec<Vec<Vec<String>>>,
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::from_integer(0.into()); dim];
    v[i] = Scalar::from_integer(1.into());
    v
}

pub(crate) fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("[{}]", parts.join(", "))
}
