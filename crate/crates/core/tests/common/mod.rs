#![allow(dead_code)]

use serde_json::Value;
use std::path::{Path, PathBuf};

pub fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs the CLI in-process; returns (exit code, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("momgauge").chain(args.iter().copied());
    let code = momgauge::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn validate_schema(doc: &Value) -> Result<(), String> {
    let text = std::fs::read_to_string(repo_root().join("schema/output.v1.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).map_err(|e| e.to_string())?;
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors.join("; "))
    }
}

/// Structural comparison: identical keys, strings and integers; floats equal
/// to `rel` relative (absolute below 1).
pub fn json_close(a: &Value, b: &Value, rel: f64, path: &str) -> Result<(), String> {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => {
            if x.is_f64() || y.is_f64() {
                let (x, y) = (x.as_f64().unwrap(), y.as_f64().unwrap());
                if (x - y).abs() <= rel * x.abs().max(y.abs()).max(1.0) {
                    return Ok(());
                }
            } else if x == y {
                return Ok(());
            }
            Err(format!("{path}: {x} != {y}"))
        }
        (Value::Array(x), Value::Array(y)) => {
            if x.len() != y.len() {
                return Err(format!("{path}: length {} != {}", x.len(), y.len()));
            }
            x.iter().zip(y).enumerate().try_for_each(|(i, (u, v))| json_close(u, v, rel, &format!("{path}[{i}]")))
        }
        (Value::Object(x), Value::Object(y)) => {
            let kx: Vec<_> = x.keys().collect();
            let ky: Vec<_> = y.keys().collect();
            if kx != ky {
                return Err(format!("{path}: keys {kx:?} != {ky:?}"));
            }
            x.iter().try_for_each(|(k, u)| json_close(u, &y[k], rel, &format!("{path}.{k}")))
        }
        _ if a == b => Ok(()),
        _ => Err(format!("{path}: {a} != {b}")),
    }
}

/// Golden invocations: file stem and arguments.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("nc_check", &["nc-check", "--n", "32", "--extent", "6", "--states", "3", "--seed", "11"]),
    ("spectrum", &["spectrum", "--e", "1", "--B", "1", "--nmax", "10"]),
    ("theta_capacitor", &["theta-map", "--variant", "capacitor", "--samples", "64"]),
    ("theta_sheets", &["theta-map", "--variant", "sheets", "--j", "0.5", "--pa", "2", "--samples", "64"]),
    ("solve_field", &["solve-field", "--preset", "capacitor", "--nodes", "128"]),
    ("reciprocity", &["reciprocity", "--a", "0.7", "--b", "0.3", "--nmax", "10"]),
];
