//! Exact dense linear algebra over any field the crate works with.

use crate::scalar::Field;

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].vanishes()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].try_inv().expect("pivot is nonzero");
        for j in c..cols {
            m[r][j] = m[r][j].clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].vanishes() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Some solution of `a x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    assert_eq!(a.len(), b.len());
    let cols = a.first().map_or(0, Vec::len);
    let zero = b.first()?.zero_like();
    let mut m: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![zero; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Coefficients expressing `v` in terms of `basis` (given as vectors), if
/// `v` lies in their span.
pub fn express<F: Field>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    let n = v.len();
    if basis.is_empty() {
        return v.iter().all(|c| c.vanishes()).then(Vec::new);
    }
    let a: Matrix<F> = (0..n).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
    solve(&a, v)
}

pub fn in_span<F: Field>(vectors: &[Vec<F>], v: &[F]) -> bool {
    express(vectors, v).is_some()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel<F: Field>(m: &[Vec<F>]) -> Vec<Vec<F>> {
    let Some(first) = m.first().and_then(|r| r.first()) else {
        return Vec::new();
    };
    let zero = first.zero_like();
    let one = first.one_like();
    let cols = m[0].len();
    let mut r = m.to_vec();
    let pivots = rref(&mut r);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[row][free].clone();
        }
        out.push(v);
    }
    out
}

pub fn mat_vec<F: Field>(m: &[Vec<F>], v: &[F]) -> Vec<F> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(v[0].zero_like(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

pub fn transpose<F: Clone>(m: &[Vec<F>]) -> Matrix<F> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = a[0][0].one_like();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].vanishes()) else {
            return det.zero_like();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = det * a[c][c].clone();
        let inv = a[c][c].try_inv().unwrap();
        for i in c + 1..n {
            if a[i][c].vanishes() {
                continue;
            }
            let f = a[i][c].clone() * inv.clone();
            for j in c..n {
                let v = a[c][j].clone() * f.clone();
                a[i][j] = a[i][j].clone() - v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int, ints, Scalar};

    fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
        rows.iter().map(|r| ints(r)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn solve_and_inconsistency() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &ints(&[3, 5])).unwrap();
        assert_eq!(x, vec![frac(4, 5), frac(7, 5)]);
        let singular = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&singular, &ints(&[1, 3])).is_none());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 9]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&a, v).iter().all(|c| *c == int(0)));
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = m(&[&[2, -1, 0], &[1, 3, 2], &[0, 5, -4]]);
        // 2(3*-4 - 2*5) + 1(1*-4 - 0) = -44 - 4
        assert_eq!(determinant(&a), int(-48));
    }

    #[test]
    fn span_membership() {
        let basis = vec![ints(&[1, 0, 1]), ints(&[0, 1, 1])];
        assert!(in_span(&basis, &ints(&[2, 3, 5])));
        assert!(!in_span(&basis, &ints(&[2, 3, 4])));
    }
}
