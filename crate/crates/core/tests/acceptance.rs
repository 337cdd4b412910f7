//! Acceptance run: every criterion at its stated budget, one line each, plus
//! oracles that do not go through the library's own code paths.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jck_core::bounds::{degree_bound, pi, pibar};
use jck_core::catalog::CatalogEntry;
use jck_core::certify::{load_catalog, run_criterion, CRITERIA};
use jck_core::scalar::{int, Scalar};
use jck_core::RunConfig;

const BUDGETS_SECS: [u64; 10] = [1, 1, 60, 10, 10, 30, 10, 30, 10, 30];

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Direct summation, no early exit, no shared helpers.
fn pi_oracle(r: u128, n: u128, d: u128) -> u128 {
    (0..=d)
        .map(|s| {
            let used = (s + r) * (n - 1) + 1;
            binom(s + r - 1, s) * d.saturating_sub(used)
        })
        .sum()
}

fn pibar_oracle(r: u128, n: u128, delta: u128) -> u128 {
    let rho = delta / (n - 1);
    let m = delta - rho * (n - 1) + 1;
    m * binom(r + rho + 1, r + 1) + (n - 1 - m) * binom(r + rho, r + 1)
}

fn bounds_oracle() -> Result<usize, String> {
    let mut cases = 0;
    for r in 1..=6u64 {
        for n in 2..=8u64 {
            for delta in n - 1..=20 {
                let d = delta + r * (n - 1) + 2;
                let (a, b) = (pibar_oracle(r.into(), n.into(), delta.into()), pi_oracle(r.into(), n.into(), d.into()));
                if a != b {
                    return Err(format!("oracle disagrees at r={r} n={n} delta={delta}"));
                }
                let lib = (pibar(r, n, delta).map_err(|e| e.to_string())?, pi(r, n, d).map_err(|e| e.to_string())?);
                if lib != (a.into(), b.into()) {
                    return Err(format!("library disagrees with oracle at r={r} n={n} delta={delta}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn degree_oracle() -> Result<usize, String> {
    let mut cases = 0;
    for r in 1..=5u32 {
        for n in 2..=6u64 {
            for rho in 1..=4u64 {
                let delta = rho * (n - 1);
                let want = Scalar::new(delta.pow(r + 1).into(), (n - 1).pow(r).into());
                if degree_bound(r.into(), n, delta).map_err(|e| e.to_string())? != want {
                    return Err(format!("degree_bound r={r} n={n} rho={rho}"));
                }
                cases += 1;
            }
        }
    }
    let v = degree_bound(3, 6, 9).map_err(|e| e.to_string())?;
    if v != Scalar::new(6561.into(), 125.into()) || v < int(27) || v < int(17) {
        return Err("degree_bound(3, 6, 9)".into());
    }
    Ok(cases + 1)
}

fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Symmetric matrices: the norm is the determinant and the adjoint the
/// adjugate, in the layout `[[a1, c3, c2], [c3, a2, c1], [c2, c1, a3]]`.
fn symmetric_matrix_oracle(entries: &[CatalogEntry], cfg: &RunConfig) -> Result<usize, String> {
    let e = entries.iter().find(|e| e.name == "H3R").ok_or("H3R missing")?;
    let mut sampler = cfg.sampler("acceptance-symmetric");
    for _ in 0..cfg.samples {
        let v = sampler.vector(6);
        let m = [
            [v[0].clone(), v[5].clone(), v[4].clone()],
            [v[5].clone(), v[1].clone(), v[3].clone()],
            [v[4].clone(), v[3].clone(), v[2].clone()],
        ];
        let cof = |i: usize, j: usize| {
            let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (0..3).filter(|&c| c != j).collect();
            let minor = &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]] - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]];
            if (i + j) % 2 == 0 { minor } else { -minor }
        };
        let adj = [cof(0, 0), cof(1, 1), cof(2, 2), cof(1, 2), cof(0, 2), cof(0, 1)];
        let norm = e.algebra.norm(&v).map_err(|x| x.to_string())?;
        let sharp = e.algebra.adjoint(&v).map_err(|x| x.to_string())?;
        if norm != det3(&m) || sharp != adj {
            return Err(format!("H3R disagrees with det/adjugate at {v:?}"));
        }
    }
    Ok(cfg.samples)
}

/// `Q x Q x Q`: norm `x1 x2 x3`, adjoint `(x2 x3, x1 x3, x1 x2)`.
fn diagonal_oracle(entries: &[CatalogEntry], cfg: &RunConfig) -> Result<usize, String> {
    let e = entries.iter().find(|e| e.name == "A1").ok_or("A1 missing")?;
    let mut sampler = cfg.sampler("acceptance-diagonal");
    for _ in 0..cfg.samples {
        let x = sampler.vector(3);
        let sharp = vec![&x[1] * &x[2], &x[0] * &x[2], &x[0] * &x[1]];
        if e.algebra.norm(&x).map_err(|x| x.to_string())? != &x[0] * &x[1] * &x[2]
            || e.algebra.adjoint(&x).map_err(|x| x.to_string())? != sharp
        {
            return Err(format!("A1 disagrees with the diagonal formulas at {x:?}"));
        }
    }
    Ok(cfg.samples)
}

fn main() -> ExitCode {
    let cfg = RunConfig::default();
    let start = Instant::now();
    let entries = match load_catalog(&cfg) {
        Ok(e) => e,
        Err(e) => {
            println!("FAIL catalog: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!("catalog loaded and validated in {:.2?}", start.elapsed());

    let mut failed = 0;
    for (i, name) in CRITERIA.iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let report = run_criterion(id, &entries, &cfg);
        let oracle = match id {
            1 => Some(bounds_oracle()),
            2 => Some(degree_oracle()),
            4 => Some(symmetric_matrix_oracle(&entries, &cfg).and_then(|a| Ok(a + diagonal_oracle(&entries, &cfg)?))),
            _ => None,
        };
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(BUDGETS_SECS[i]);
        let mut problems: Vec<String> = report.failures.iter().take(3).cloned().collect();
        let mut oracle_checks = 0;
        match oracle {
            Some(Ok(n)) => oracle_checks = n,
            Some(Err(e)) => problems.push(format!("oracle: {e}")),
            None => {}
        }
        if elapsed > budget {
            problems.push(format!("over budget: {elapsed:.2?} > {budget:?}"));
        }
        let passed = report.passed && problems.is_empty();
        if !passed {
            failed += 1;
        }
        let sampled =
            if report.sampled.is_empty() { String::new() } else { format!(", sampled: {}", report.sampled.join(" ")) };
        println!(
            "{} criterion {id:>2} {name}: {} checks + {oracle_checks} oracle, {elapsed:.2?} of {budget:?}{sampled}",
            if passed { "PASS" } else { "FAIL" },
            report.checks,
        );
        for p in problems {
            println!("    {p}");
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
