//! Parsing of command-line JSON arguments into library types.

use std::path::Path;

use jck_core::catalog::catalog_get;
use jck_core::cubic::ZornPoint;
use jck_core::jordan::{AlgebraSpec, SpecJson};
use jck_core::parse::parse_poly;
use jck_core::scalar::parse_scalar;
use jck_core::{JordanAlgebra, MultiPoly, RunConfig, Scalar};
use serde_json::Value;

use crate::CliError;

/// A catalog name, or a path to a JSON algebra spec.
pub fn algebra(arg: &str, cfg: &RunConfig) -> Result<JordanAlgebra, CliError> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
        let json: SpecJson =
            serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{arg}: malformed algebra spec: {e}")))?;
        let spec = AlgebraSpec::from_json(&json)?;
        return Ok(JordanAlgebra::validate(spec, cfg)?);
    }
    Ok(catalog_get(arg, cfg)?.algebra)
}

fn json(arg: &str, what: &str) -> Result<Value, CliError> {
    serde_json::from_str(arg).map_err(|e| CliError::Usage(format!("{what}: malformed JSON: {e}")))
}

fn scalar(v: &Value, what: &str) -> Result<Scalar, CliError> {
    match v {
        Value::String(s) => Ok(parse_scalar(s)?),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(parse_scalar(&n.to_string())?),
        _ => Err(CliError::Usage(format!("{what}: expected an integer or a \"p/q\" string, got {v}"))),
    }
}

fn vector_value(v: &Value, what: &str) -> Result<Vec<Scalar>, CliError> {
    let Value::Array(items) = v else {
        return Err(CliError::Usage(format!("{what}: expected a JSON array")));
    };
    items.iter().enumerate().map(|(i, c)| scalar(c, &format!("{what}[{i}]"))).collect()
}

pub fn single(arg: &str, what: &str) -> Result<Scalar, CliError> {
    scalar(&json(arg, what)?, what)
}

pub fn vector(arg: &str, what: &str, len: usize) -> Result<Vec<Scalar>, CliError> {
    let v = vector_value(&json(arg, what)?, what)?;
    if v.len() != len {
        return Err(CliError::Usage(format!("{what}: expected {len} coordinates, got {}", v.len())));
    }
    Ok(v)
}

/// A JSON array of `count` vectors of length `len`.
pub fn vectors(arg: &str, what: &str, count: usize, len: usize) -> Result<Vec<Vec<Scalar>>, CliError> {
    let Value::Array(items) = json(arg, what)? else {
        return Err(CliError::Usage(format!("{what}: expected a JSON array")));
    };
    if items.len() != count {
        return Err(CliError::Usage(format!("{what}: expected {count} entries, got {}", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let out = vector_value(v, &format!("{what}[{i}]"))?;
            if out.len() != len {
                return Err(CliError::Usage(format!("{what}[{i}]: expected {len} coordinates, got {}", out.len())));
            }
            Ok(out)
        })
        .collect()
}

pub fn matrix(arg: &str, what: &str, n: usize) -> Result<Vec<Vec<Scalar>>, CliError> {
    vectors(arg, what, n, n)
}

pub fn zorn(arg: &str, what: &str, k: usize) -> Result<ZornPoint<Scalar>, CliError> {
    Ok(ZornPoint::from_slice(k, &vector(arg, what, 2 * k + 2)?)?)
}

/// A JSON list of polynomial strings in `x1, x2, ...`; the variable count is
/// `vars` or else the largest index that occurs.
pub fn polys(arg: &str, what: &str, vars: Option<usize>) -> Result<Vec<MultiPoly>, CliError> {
    let texts: Vec<String> =
        serde_json::from_str(arg).map_err(|e| CliError::Usage(format!("{what}: expected a JSON list of strings: {e}")))?;
    let n = vars.unwrap_or_else(|| texts.iter().map(|t| max_var(t)).max().unwrap_or(0));
    if n == 0 {
        return Err(CliError::Usage(format!("{what}: no variables")));
    }
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| parse_poly(n, t).map_err(|e| CliError::Usage(format!("{what}[{i}]: {e}"))))
        .collect()
}

fn max_var(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let start = i + 1;
            let mut end = start;
            while end < b.len() && b[end].is_ascii_digit() {
                end += 1;
            }
            if let Ok(v) = text[start..end].parse::<usize>() {
                best = best.max(v);
            }
            i = end;
        } else {
            i += 1;
        }
    }
    best
}
