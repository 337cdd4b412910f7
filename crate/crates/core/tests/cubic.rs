use jck_core::catalog::catalog_get;
use jck_core::cubic::{inversion_i, nu3, on_x, twisted_cubic_through, StructuralPair, Translation, ZornPoint};
use jck_core::scalar::{int, ints};
use jck_core::{JordanAlgebra, RunConfig, Scalar};
use proptest::prelude::*;

fn algebra(name: &str) -> JordanAlgebra {
    catalog_get(name, &RunConfig::default()).unwrap().algebra
}

fn vector(k: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((-5i64..=5).prop_map(int), k)
}

fn names() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A1", "A2", "A3", "A6", "A7", "A8", "A13", "A14", "Jstar", "CxJprime(3)", "H3R"])
}

#[test]
fn curve_through_zero_unit_and_twice_unit() {
    for name in ["A1", "A3", "Jstar", "H3R"] {
        let j = algebra(name);
        let e = j.unit().to_vec();
        let two_e: Vec<Scalar> = e.iter().map(|c| c * int(2)).collect();
        let zero = vec![int(0); j.dim()];
        let curve = twisted_cubic_through(&j, &zero, &e, &two_e).unwrap();
        // every point is nu3(s e), so the curve lies on the line of multiples of e
        for t in [-3, -1, 3, 5] {
            let p = curve.eval(&int(t));
            assert!(on_x(&j, &p).unwrap(), "{name}");
            let u: Vec<Scalar> = p.x.iter().map(|c| c / &p.s).collect();
            let c = &u[0] / &e[0];
            assert!(u.iter().zip(&e).all(|(a, b)| a == &(b * &c)), "{name}");
        }
    }
}

#[test]
fn cubic_through_a_triple_passes_its_points() {
    let j = algebra("A13");
    let (x, y, z) = (ints(&[1, 2, 0, 3]), ints(&[2, -1, 1, 1]), ints(&[0, 3, 2, -2]));
    let c = twisted_cubic_through(&j, &x, &y, &z).unwrap();
    assert_eq!(c.degree(), 3);
    assert!(c.is_primitive());
    assert!(c.eval(&int(0)).proj_eq(&nu3(&j, &y).unwrap()).unwrap());
    assert!(c.eval(&int(1)).proj_eq(&nu3(&j, &z).unwrap()).unwrap());
    assert!(c.at_infinity().proj_eq(&nu3(&j, &x).unwrap()).unwrap());
}

#[test]
fn identity_structural_pair_is_the_identity() {
    let j = algebra("A3");
    let id: Vec<Vec<Scalar>> = (0..3).map(|i| (0..3).map(|k| int((i == k) as i64)).collect()).collect();
    let g = StructuralPair::verify(&j, id.clone(), id, int(1)).unwrap();
    let m = ZornPoint::from_slice(3, &ints(&[1, 2, 3, 4, 5, 6, 7, 8])).unwrap();
    assert_eq!(g.apply(&m), m);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn automorphisms_preserve_x(name in names(), u in vector(9), w in vector(9)) {
        let j = algebra(name);
        let k = j.dim();
        let (u, w) = (&u[..k], &w[..k]);
        let p = nu3(&j, u).unwrap();
        prop_assert!(on_x(&j, &inversion_i(&p)).unwrap());
        prop_assert!(on_x(&j, &Translation::new(&j, w).unwrap().apply(&p)).unwrap());
    }

    #[test]
    fn inversion_conjugates_to_inverse(name in names(), u in vector(9)) {
        let j = algebra(name);
        let u = &u[..j.dim()];
        prop_assume!(j.is_invertible(u).unwrap());
        let lhs = nu3(&j, &j.invert(u).unwrap()).unwrap();
        prop_assert!(lhs.proj_eq(&inversion_i(&nu3(&j, u).unwrap())).unwrap());
    }

    #[test]
    fn diagonal_scalings_are_structural(a in 1i64..5, b in -4i64..4, c in 1i64..5, u in vector(3)) {
        prop_assume!(b != 0);
        let j = algebra("A1");
        let d = |v: [Scalar; 3]| -> Vec<Vec<Scalar>> {
            (0..3).map(|i| (0..3).map(|k| if i == k { v[i].clone() } else { int(0) }).collect()).collect()
        };
        let (a, b, c) = (int(a), int(b), int(c));
        let g = d([a.clone(), b.clone(), c.clone()]);
        let gs = d([a.recip(), b.recip(), c.recip()]);
        let pair = StructuralPair::verify(&j, g, gs, &a * &b * &c).unwrap();
        prop_assert!(on_x(&j, &pair.apply(&nu3(&j, &u).unwrap())).unwrap());
    }

    #[test]
    fn constructions_with_permuted_roles_agree(x in vector(4), y in vector(4), z in vector(4)) {
        let j = algebra("Jstar");
        let (Ok(c1), Ok(c2)) = (twisted_cubic_through(&j, &x, &y, &z), twisted_cubic_through(&j, &z, &x, &y)) else {
            return Ok(());
        };
        for t in -3..3 {
            prop_assert!(c2.contains(&c1.eval(&int(t)).to_vec()).unwrap());
        }
        prop_assert_eq!(c1.span_dim(&(0..6).map(int).collect::<Vec<_>>()), 4);
    }
}
