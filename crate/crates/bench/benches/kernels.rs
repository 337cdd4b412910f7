use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use jck_bench::jck_core::bounds::pibar_equals_pi;
use jck_bench::jck_core::catalog::catalog_spec;
use jck_bench::jck_core::cremona::{adjoint_cremona, verify_involution};
use jck_bench::jck_core::cubic::{nu3, twisted_cubic_through, ZornPoint};
use jck_bench::jck_core::scalar::int;
use jck_bench::jck_core::variety::oadp_solve;
use jck_bench::jck_core::{JordanAlgebra, RunConfig};
use jck_bench::{algebra, points};

fn min_poly(c: &mut Criterion) {
    let cfg = RunConfig::default();
    for name in ["A3", "Jstar", "H3R", "H3C"] {
        c.bench_function(&format!("validate+min_poly/{name}"), |b| {
            b.iter_batched(
                || catalog_spec(name).unwrap(),
                |spec| {
                    let j = JordanAlgebra::validate(spec, &cfg).unwrap();
                    black_box(j.min_poly().unwrap().m)
                },
                BatchSize::SmallInput,
            )
        });
    }
}

fn pointwise(c: &mut Criterion) {
    for name in ["H3R", "H3O"] {
        let j = algebra(name);
        let xs = points("bench-nu3", 16, j.dim());
        j.trace_coefficients().unwrap();
        c.bench_function(&format!("nu3/{name}"), |b| {
            b.iter(|| xs.iter().map(|x| nu3(&j, x).unwrap().t).count())
        });
    }
}

fn curves(c: &mut Criterion) {
    let j = algebra("A13");
    let p = points("bench-curve", 3, 4);
    c.bench_function("twisted_cubic_through/A13", |b| {
        b.iter(|| twisted_cubic_through(&j, &p[0], &p[1], &p[2]).unwrap().degree())
    });
}

fn involutions(c: &mut Criterion) {
    for name in ["A1", "H3R"] {
        let phi = adjoint_cremona(&algebra(name)).unwrap();
        c.bench_function(&format!("verify_involution/{name}"), |b| {
            b.iter(|| verify_involution(&phi, None).unwrap().n_cubic.len())
        });
    }
}

fn secants(c: &mut Criterion) {
    let j = algebra("CxJprime(3)");
    let p = points("bench-secant", 2, 4);
    let q = ZornPoint { s: int(1), x: p[0].clone(), y: p[1].clone(), t: int(3) };
    c.bench_function("oadp_solve/CxJprime(3)", |b| b.iter(|| oadp_solve(&j, &q).unwrap().passed()));
}

fn bounds(c: &mut Criterion) {
    c.bench_function("pibar_equals_pi/grid", |b| {
        b.iter(|| {
            let mut ok = true;
            for r in 1..=6 {
                for n in 2..=8 {
                    for delta in n - 1..=20 {
                        ok &= pibar_equals_pi(r, n, delta).unwrap().equal;
                    }
                }
            }
            ok
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = min_poly, pointwise, curves, involutions, secants, bounds
}
criterion_main!(benches);
