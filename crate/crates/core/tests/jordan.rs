use jck_core::catalog::{catalog_get, catalog_spec, cubic_names};
use jck_core::jordan::{direct_product, identity_form, spin_factor, AlgebraSpec, IdentityCheck};
use jck_core::parse::parse_poly;
use jck_core::scalar::{frac, int, ints};
use jck_core::{Error, JordanAlgebra, MultiPoly, RunConfig, Scalar};
use proptest::prelude::*;

fn cfg() -> RunConfig {
    RunConfig::default()
}

fn algebra(name: &str) -> JordanAlgebra {
    catalog_get(name, &cfg()).unwrap().algebra
}

fn diag(entries: &[Scalar]) -> Vec<Vec<Scalar>> {
    (0..entries.len())
        .map(|i| (0..entries.len()).map(|j| if i == j { entries[i].clone() } else { int(0) }).collect())
        .collect()
}

#[test]
fn a3_square_of_the_middle_basis_vector() {
    let j = algebra("A3");
    assert_eq!(j.mul(&ints(&[0, 1, 0]), &ints(&[0, 1, 0])).unwrap(), ints(&[0, 0, 1]));
    let x = ints(&[2, -1, 5]);
    assert_eq!(j.mul(j.unit(), &x).unwrap(), x);
}

#[test]
fn ranks_of_small_algebras() {
    assert_eq!(algebra("Q").rank(), 1);
    for name in ["A1", "A3", "H3R"] {
        assert_eq!(algebra(name).rank(), 3, "{name}");
    }
    assert_eq!(algebra("Spin(4)").rank(), 2);
}

#[test]
fn non_commutative_table_is_rejected() {
    let mut table = catalog_spec("A3").unwrap().table().to_vec();
    table[1][2][0] = int(1);
    let spec = AlgebraSpec::new(ints(&[1, 0, 0]), table).unwrap();
    let err = JordanAlgebra::validate(spec, &cfg()).unwrap_err();
    assert!(matches!(err, Error::NotCommutative { .. }), "{err:?}");
}

#[test]
fn spin_factor_minimum_polynomial() {
    // x^2 - 2 lambda x + (lambda^2 + B(y, y)) e with B the identity form
    let j = algebra("Spin(3)");
    let mp = j.min_poly().unwrap();
    assert_eq!(mp.m, 2);
    assert_eq!(mp.sigma[0], parse_poly(3, "2*x1").unwrap());
    assert_eq!(mp.sigma[1], parse_poly(3, "x1^2 + x2^2 + x3^2").unwrap());
}

#[test]
fn q_times_spin_has_the_tabulated_norm() {
    let j = algebra("CxJprime(3)");
    assert_eq!((j.dim(), j.rank()), (4, 3));
    assert_eq!(j.norm_form().unwrap(), parse_poly(4, "x1*(x2^2 + x3^2 + x4^2)").unwrap());
}

#[test]
fn direct_products_add_ranks() {
    let cfg = cfg();
    let pairs = [("Q", "A3"), ("A1", "Spin(3)"), ("Q", "Q"), ("A2", "Spin(2)")];
    for (a, b) in pairs {
        let (ja, jb) = (algebra(a), algebra(b));
        let prod = JordanAlgebra::validate(direct_product(ja.spec(), jb.spec()), &cfg).unwrap();
        assert_eq!(prod.rank(), ja.rank() + jb.rank(), "{a} x {b}");
    }
}

#[test]
fn spin_factor_of_a_degenerate_form() {
    let mut b = identity_form(3);
    b[2][2] = int(0);
    let j = JordanAlgebra::validate(spin_factor(&b).unwrap(), &cfg()).unwrap();
    assert_eq!(j.rank(), 2);
}

#[test]
fn symmetrized_a18_is_a7() {
    let a7 = algebra("A7");
    for l in [frac(1, 2), int(3), frac(-5, 7), int(0)] {
        let a18 = algebra(&format!("A18({l})"));
        let g = diag(&[int(1), int(1), int(1), int(2) / (int(1) + &l)]);
        assert!(a18.is_homomorphism(&a7, &g).unwrap(), "lambda = {l}");
        assert_eq!(a18.rank(), 3);
    }
    assert!(matches!(catalog_spec("A18(-1)"), Err(Error::InvalidParameter(_))));
}

#[test]
fn symmetrized_a19_is_a8() {
    let g = diag(&ints(&[1, 1, 1, -1]));
    assert!(algebra("A19").is_homomorphism(&algebra("A8"), &g).unwrap());
    assert!(!algebra("A19").is_homomorphism(&algebra("A8"), &diag(&ints(&[1, 1, 1, 1]))).unwrap());
}

#[test]
fn a14_adjoint_from_the_associative_table() {
    let j = algebra("A14");
    let adj: Vec<MultiPoly> =
        ["x1*x2", "x1^2", "-x2*x3", "-x1*x4"].iter().map(|t| parse_poly(4, t).unwrap()).collect();
    assert_eq!(j.adjoint_form().unwrap().components(), adj.as_slice());
}

#[test]
fn non_invertible_elements() {
    let j = algebra("A3");
    assert_eq!(j.invert(&ints(&[0, 1, 2])), Err(Error::NotInvertible));
    let x = ints(&[2, 1, -3]);
    let inv = j.invert(&x).unwrap();
    assert_eq!(j.mul(&x, &inv).unwrap(), ints(&[1, 0, 0]));
}

#[test]
fn rank_three_adjoint_identities_hold_symbolically() {
    for name in cubic_names() {
        let j = algebra(name);
        if j.dim() > cfg().symbolic_dim_threshold {
            assert_eq!(j.identity_check(), IdentityCheck::Sampled);
            continue;
        }
        let x = MultiPoly::vars(j.dim());
        let n = j.norm_form().unwrap();
        let sharp = j.adjoint_form().unwrap().components().to_vec();
        let xs = j.mul(&x, &sharp).unwrap();
        let e = j.unit();
        for (a, u) in xs.iter().zip(e) {
            assert_eq!(a, &n.scale_by(u), "{name}: x x# = N(x) e");
        }
        let twice = j.adjoint_generic(&sharp).unwrap();
        for (a, xi) in twice.iter().zip(&x) {
            assert_eq!(a, &(&n * xi), "{name}: (x#)# = N(x) x");
        }
        for (i, s) in j.min_poly().unwrap().sigma.iter().enumerate() {
            assert!(s.is_homogeneous_of(i as u32 + 1), "{name}: sigma_{}", i + 1);
        }
    }
}

#[test]
fn sharp_bilinear_polarizes_the_adjoint() {
    let j = algebra("Jstar");
    let (x, y) = (ints(&[1, 2, -1, 3]), ints(&[0, 1, 4, -2]));
    let sum: Vec<Scalar> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
    let expected: Vec<Scalar> = j
        .adjoint(&sum)
        .unwrap()
        .iter()
        .zip(j.adjoint(&x).unwrap())
        .zip(j.adjoint(&y).unwrap())
        .map(|((s, a), b)| s - a - b)
        .collect();
    assert_eq!(j.sharp_bilinear(&x, &y).unwrap(), expected);
}

fn small() -> impl Strategy<Value = i64> {
    -6i64..=6
}

fn vector(k: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(small().prop_map(int), k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn trace_is_linear(x in vector(4), y in vector(4), a in small(), b in small()) {
        let j = algebra("Jstar");
        let comb: Vec<Scalar> = x.iter().zip(&y).map(|(u, v)| int(a) * u + int(b) * v).collect();
        prop_assert_eq!(j.trace(&comb).unwrap(), int(a) * j.trace(&x).unwrap() + int(b) * j.trace(&y).unwrap());
    }

    /// Elements of `Q[y]` are polynomials in `y`; the norm is multiplicative
    /// on that associative subalgebra.
    #[test]
    fn norm_is_multiplicative_on_q_of_y(y in vector(6), p in vector(3), q in vector(3)) {
        let j = algebra("H3R");
        let powers = j.powers(&y, 2);
        let combine = |c: &[Scalar]| -> Vec<Scalar> {
            (0..6).map(|i| (0..3).map(|d| &c[d] * &powers[d][i]).sum()).collect()
        };
        let (u, v) = (combine(&p), combine(&q));
        let uv = j.mul(&u, &v).unwrap();
        prop_assert_eq!(j.norm(&uv).unwrap(), j.norm(&u).unwrap() * j.norm(&v).unwrap());
    }

    #[test]
    fn inverse_times_element_is_the_unit(x in vector(4)) {
        let j = algebra("A13");
        prop_assume!(j.is_invertible(&x).unwrap());
        let inv = j.invert(&x).unwrap();
        prop_assert_eq!(j.mul(&x, &inv).unwrap(), j.unit().to_vec());
    }

    #[test]
    fn sampled_octonion_identities(x in vector(27)) {
        let j = algebra("H3O");
        let sharp = j.adjoint(&x).unwrap();
        let n = j.norm(&x).unwrap();
        let e: Vec<Scalar> = j.unit().iter().map(|u| &n * u).collect();
        prop_assert_eq!(j.mul(&x, &sharp).unwrap(), e);
        let twice = j.adjoint(&sharp).unwrap();
        prop_assert_eq!(twice, x.iter().map(|c| &n * c).collect::<Vec<_>>());
    }
}
