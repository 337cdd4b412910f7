use jck_core::bounds::{degree_bound, pi, pibar, pibar_equals_pi, theta, BoundQuery};
use jck_core::scalar::int;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn cubic_case_is_linear_in_r() {
    for r in 1..10 {
        assert_eq!(pibar(r, 3, 3).unwrap(), BigInt::from(2 * r + 4));
    }
}

#[test]
fn minimal_degree_varieties() {
    for r in 1..6 {
        for n in 2..9 {
            assert_eq!(degree_bound(r, n, n - 1).unwrap(), int(n as i64 - 1));
        }
    }
}

#[test]
fn degree_bound_admits_the_degree_six_example() {
    assert!(degree_bound(2, 3, 3).unwrap() >= int(6));
}

#[test]
fn large_arguments_stay_exact() {
    let id = pibar_equals_pi(20, 3, 500).unwrap();
    assert!(id.equal);
    assert!(id.pi > BigInt::from(u64::MAX));
    assert!(theta(20, 30, 7).unwrap() > BigInt::from(0));
}

proptest! {
    #[test]
    fn identity_beyond_the_acceptance_grid(r in 1u64..9, n in 2u64..12, extra in 0u64..60) {
        prop_assert!(pibar_equals_pi(r, n, n - 1 + extra).unwrap().equal);
    }

    #[test]
    fn pi_is_nondecreasing_in_d(r in 1u64..6, n in 2u64..9, d in 1u64..80) {
        prop_assert!(pi(r, n, d + 1).unwrap() >= pi(r, n, d).unwrap());
    }

    #[test]
    fn query_reconstructs_delta(r in 1u64..6, n in 2u64..9, extra in 0u64..50) {
        let q = BoundQuery::new(r, n, n - 1 + extra).unwrap();
        prop_assert_eq!(q.rho * (n - 1) + q.m - 1, q.delta);
    }
}
