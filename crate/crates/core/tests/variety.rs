use jck_core::catalog::catalog_get;
use jck_core::cremona::{adjoint_cremona, verify_involution};
use jck_core::cubic::{nu3, ZornPoint};
use jck_core::scalar::{int, ints};
use jck_core::variety::{from_cremona, oadp_solve, scroll_param, three_point_curve_check, ScrollKind, VarietyParam};
use jck_core::{Error, JordanAlgebra, RunConfig, Scalar};
use proptest::prelude::*;

fn algebra(name: &str) -> JordanAlgebra {
    catalog_get(name, &RunConfig::default()).unwrap().algebra
}

fn variety(name: &str) -> (JordanAlgebra, VarietyParam) {
    let j = algebra(name);
    let phi = adjoint_cremona(&j).unwrap();
    let v = from_cremona(&phi, &verify_involution(&phi, None).unwrap(), name).unwrap();
    (j, v)
}

fn vector(k: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((-6i64..=6).prop_map(int), k)
}

#[test]
fn surface_scroll_has_six_components() {
    assert_eq!(scroll_param(ScrollKind::S113, 1).unwrap().components().len(), 6);
    assert_eq!(scroll_param(ScrollKind::S122, 3).unwrap().components().len(), 10);
}

#[test]
fn general_line_on_the_segre_threefold() {
    let (_, v) = variety("A1");
    let li = v.line_image(&ints(&[1, 2, -1, 3]), &ints(&[2, 1, 4, -2])).unwrap();
    assert_eq!((li.degree, li.span_dim), (3, 4));
}

#[test]
fn special_lines_have_lower_degree() {
    let s = scroll_param(ScrollKind::S122, 2).unwrap();
    let li = s.line_image(&ints(&[1, 0, 2, 3]), &ints(&[2, 0, -1, 1])).unwrap();
    assert!(li.degree <= 2);
    let (_, v) = variety("A3");
    // (0 : 0 : 1 : 0) is a base point: x0 = 0 and N = x1^3 vanish there
    let li = v.line_image(&ints(&[0, 0, 1, 0]), &ints(&[2, 1, 3, -1])).unwrap();
    assert!(li.degree < 3);
    assert!(!v.line_misses_base_locus(&ints(&[0, 1, 0, 0]), &ints(&[0, 0, 1, 0])).unwrap());
}

#[test]
fn three_point_checks() {
    let (j, v) = variety("A1");
    assert!(three_point_curve_check(&v, &j, &ints(&[1, 2, 3]), &ints(&[0, 1, -1]), &ints(&[2, -3, 5])).unwrap());
    let e = j.unit().to_vec();
    let two_e: Vec<Scalar> = e.iter().map(|c| c * int(2)).collect();
    assert!(three_point_curve_check(&v, &j, &ints(&[0, 0, 0]), &e, &two_e).unwrap());
    let err = three_point_curve_check(&v, &j, &ints(&[1, 2, 3]), &ints(&[1, 5, 6]), &ints(&[2, -3, 5])).unwrap_err();
    assert!(matches!(err, Error::GenericityFailure(_)));
}

#[test]
fn points_of_x_are_rejected_as_secant_queries() {
    let j = algebra("A3");
    let q = nu3(&j, &ints(&[2, 1, -1])).unwrap();
    assert!(matches!(oadp_solve(&j, &q), Err(Error::DegenerateQ(_))));
}

#[test]
fn irrational_secants_are_conjugate() {
    let j = algebra("CxJprime(3)");
    let q = ZornPoint::from_slice(4, &ints(&[1, 0, 1, 0, 2, 1, 1, 3, 1, 1])).unwrap();
    let sol = oadp_solve(&j, &q).unwrap();
    assert!(sol.passed(), "{sol:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn chart_agrees_with_nu3(name in prop::sample::select(vec!["A1", "A2", "A7", "Jstar", "H3R"]), x in vector(6)) {
        let (j, v) = variety(name);
        let x = &x[..j.dim()];
        prop_assert_eq!(v.eval_affine(x).unwrap(), nu3(&j, x).unwrap().to_vec());
    }

    #[test]
    fn secants_through_general_points(
        name in prop::sample::select(vec!["A1", "A3", "CxJprime(3)", "Jstar"]),
        x in vector(4),
        y in vector(4),
        t in -6i64..=6,
    ) {
        let j = algebra(name);
        let k = j.dim();
        let q = ZornPoint { s: int(1), x: x[..k].to_vec(), y: y[..k].to_vec(), t: int(t) };
        match oadp_solve(&j, &q) {
            Ok(sol) => prop_assert!(sol.passed(), "{:?}", sol),
            Err(Error::DegenerateQ(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn general_lines_give_twisted_cubics(p in vector(7), q in vector(7)) {
        let (_, v) = variety("H3R");
        prop_assume!(v.line_misses_base_locus(&p, &q).unwrap_or(false));
        let li = v.line_image(&p, &q).unwrap();
        prop_assert_eq!((li.degree, li.span_dim), (3, 4));
    }
}
