use std::process::{Command, Output};

use serde_json::Value;

fn jck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jck"))
        .args(args)
        .env_remove("JCK_SEED")
        .env_remove("JCK_SAMPLES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn pibar_prints_a_bare_integer() {
    let o = jck(&["bounds", "pibar", "--r", "2", "--n", "3", "--delta", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "8");
}

#[test]
fn pibar_in_the_cubic_case_is_linear_in_r() {
    for r in 1..6 {
        let o = jck(&["bounds", "pibar", "--r", &r.to_string(), "--n", "3", "--delta", "3"]);
        assert_eq!(stdout(&o).trim(), (2 * r + 4).to_string());
    }
}

#[test]
fn cremona_verify_on_the_diagonal_algebra() {
    let o = jck(&["cremona", "verify", "--algebra", "A1"]);
    assert!(o.status.success());
    let v = json_of(&o);
    assert_eq!(v["n"], "x1*x2*x3");
    assert_eq!(v["n_matches_norm"], true);
}

#[test]
fn cremona_verify_accepts_an_explicit_map_and_ell() {
    let o = jck(&["cremona", "verify", "--map", r#"["2*x1*x3", "x2*x3", "x1*x2"]"#, "--ell", "[[1,0,0],[0,4,0],[0,0,2]]"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json_of(&o)["n"], "4*x1*x2*x3");
}

#[test]
fn catalog_show_reports_reference_forms() {
    let v = json_of(&jck(&["catalog", "show", "A7"]));
    assert_eq!(v["norm"], "x1^3");
    assert_eq!(v["norm"], v["reference_norm"]);
    assert_eq!(v["adjoint"], v["reference_adjoint"]);
    assert_eq!(v["spec"]["dim"], 4);
}

#[test]
fn algebra_from_a_spec_file() {
    let spec = stdout(&jck(&["catalog", "show", "A3"]));
    let spec = serde_json::to_string(&serde_json::from_str::<Value>(&spec).unwrap()["spec"]).unwrap();
    let path = std::env::temp_dir().join(format!("jck-spec-{}.json", std::process::id()));
    std::fs::write(&path, spec).unwrap();
    let o = jck(&["algebra", "check", "--algebra", path.to_str().unwrap()]);
    std::fs::write(&path, "{\"dim\": 3, \"unit\": [").unwrap();
    let bad = jck(&["algebra", "rank", "--algebra", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success());
    let v = json_of(&o);
    assert_eq!(v["certificate"]["rank"], 3);
    assert_eq!(v["certificate"]["jordan_identity"], "symbolic");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 1 column"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(jck(&["algebra", "rank", "--algebra", "A5"]).status.code(), Some(2));
    assert_eq!(jck(&["algebra", "norm", "--algebra", "A1", "--point", "[1, 2"]).status.code(), Some(2));
    assert_eq!(jck(&["algebra", "norm", "--algebra", "A1", "--point", "[1, 2]"]).status.code(), Some(2));
    assert_eq!(jck(&["bounds", "pibar", "--r", "2", "--n", "4", "--delta", "2"]).status.code(), Some(2));
    assert_eq!(jck(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn verification_failures_exit_one_with_a_diagnostic() {
    let o = jck(&["cubic", "through", "--algebra", "A1", "--points", "[[1,1,1],[1,1,1],[2,2,5]]"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json_of(&o);
    assert_eq!(v["module"], "cubic");
    assert_eq!(v["operation"], "twisted_cubic_through");
    assert!(v["input"].as_array().unwrap().iter().any(|a| a == "[[1,1,1],[1,1,1],[2,2,5]]"));
}

#[test]
fn three_point_cubic_certificate() {
    let o = jck(&["cubic", "through", "--algebra", "A3", "--points", "[[1,2,3],[0,1,-1],[2,-3,5]]"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v = json_of(&o);
    assert_eq!(v["curve"]["degree"], 3);
    assert_eq!(v["certificate"]["span_dim"], 4);
}

#[test]
fn nu3_and_inversion() {
    let v = json_of(&jck(&["cubic", "nu3", "--algebra", "A1", "--point", "[1, 2, 3]"]));
    assert_eq!(v["point"], serde_json::json!(["1", "1", "2", "3", "6", "3", "2", "6"]));
    let v = json_of(&jck(&["cubic", "automorphism", "--algebra", "A1", "--point", "[1,1,2,3,6,3,2,6]", "--inversion"]));
    assert_eq!(v["point"], serde_json::json!(["6", "6", "3", "2", "1", "2", "3", "1"]));
}

#[test]
fn oadp_over_the_diagonal_algebra() {
    let o = jck(&["variety", "oadp", "--algebra", "A1", "--q", "[1,0,0,0,3,1,7,4]"]);
    assert!(o.status.success());
    let v = json_of(&o);
    assert_eq!(v["lambda_mu"], "21/100");
    assert_eq!(v["on_x"], serde_json::json!([true, true]));
}

#[test]
fn variety_commands() {
    let v = json_of(&jck(&["variety", "param", "--scroll", "S113", "--r", "2"]));
    assert_eq!(v["nondegeneracy_rank"], 8);
    let v = json_of(&jck(&["variety", "line-image", "--algebra", "A3", "--line", "[[1,2,-1,3],[2,1,4,-2]]"]));
    assert_eq!((v["degree"].as_u64(), v["span_dim"].as_u64()), (Some(3), Some(4)));
    let o = jck(&["variety", "three-point", "--algebra", "A1", "--points", "[[1,2,3],[0,1,-1],[2,-3,5]]"]);
    assert!(o.status.success());
}

#[test]
fn bidegree_distinguishes_scrolls() {
    let v = json_of(&jck(&["cremona", "bidegree", "--algebra", "A3"]));
    assert_eq!(v["common_factor"], false);
    let v = json_of(&jck(&["cremona", "bidegree", "--map", r#"["x1*x1", "x1*x2", "x1*x3"]"#]));
    assert_eq!(v["scroll_case"], true);
}

#[test]
fn bounds_table_text_is_tsv() {
    let o = jck(&["bounds", "table", "--r", "1..2", "--n", "2..3", "--delta", "1..4", "--format", "text"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "r\tn\tdelta\td\tpibar\tpi\tequal");
    assert!(lines[1..].iter().all(|l| l.ends_with("\ttrue")));
}

#[test]
fn flags_win_over_environment() {
    let run = |env: &[(&str, &str)], extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_jck"));
        c.args(["verify-all", "--samples", "2"]).args(extra).env_remove("JCK_SEED").env_remove("JCK_SAMPLES");
        for (k, v) in env {
            c.env(k, v);
        }
        serde_json::from_slice::<Value>(&c.output().unwrap().stdout).unwrap()
    };
    let plain = run(&[], &[]);
    assert_eq!(run(&[("JCK_SEED", "7")], &["--seed", "0"]), plain);
    let from_env = run(&[("JCK_SEED", "7")], &[]);
    assert_eq!(from_env["config"]["seed"], 7);
    assert_eq!(from_env["all_passed"], true);
    let samples = run(&[("JCK_SAMPLES", "5")], &[]);
    assert_eq!(samples["config"]["samples"], 2);
}

#[test]
fn verify_all_is_deterministic_and_passes() {
    let a = jck(&["verify-all", "--samples", "4"]);
    let b = jck(&["verify-all", "--samples", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 10);
    let sampled = &v["criteria"][2]["sampled"];
    assert!(sampled.as_array().unwrap().iter().any(|s| s == "H3O"));
}
