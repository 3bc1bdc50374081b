use super::Failure;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::Path;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty-printed JSON with the common envelope fields first.
pub fn to_json<T: Serialize>(command: &str, body: &T) -> Result<String, Failure> {
    let env = Envelope { schema_version: SCHEMA_VERSION, command, body };
    serde_json::to_string_pretty(&env).map_err(|e| Failure::assertion(format!("serializing output: {e}")))
}

/// Writes a CSV file with a header row and 17 significant digits per value.
pub fn write_csv(path: &Path, header: &[&str], rows: impl Iterator<Item = Vec<f64>>) -> Result<(), Failure> {
    let mut text = header.join(",");
    text.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        let _ = writeln!(text, "{}", cells.join(","));
    }
    std::fs::write(path, text).map_err(|e| Failure::invalid(format!("writing {}: {e}", path.display())))
}

pub fn check_positive(name: &str, v: f64) -> Result<(), Failure> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Failure::invalid(format!("--{name} must be positive, got {v}")))
    }
}

pub fn check_finite(name: &str, v: f64) -> Result<(), Failure> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Failure::invalid(format!("--{name} must be finite, got {v}")))
    }
}
