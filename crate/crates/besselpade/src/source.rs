//! Transfer-function sources for `analyze` and `sweep`:
//! `pade:N:M`, `budak:M:N:GAMMA`, `bessel:N`, `file:PATH`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;
use crate::report::Provenance;

#[derive(Deserialize)]
struct TfFile {
    num: Vec<Value>,
    den: Vec<Value>,
}

fn coefficient_text(v: &Value) -> Result<String, CliError> {
    match v {
        Value::String(s) => Ok(s.trim().to_string()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(CliError::usage(format!(
            "coefficients must be \"p/q\" strings or integers, got {other}"
        ))),
    }
}

/// Reads `{"num": [...], "den": [...]}` (ascending powers of s).
pub fn read_tf_file(path: &Path) -> Result<Provenance, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let file: TfFile = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let convert = |vs: &[Value]| {
        vs.iter()
            .map(coefficient_text)
            .collect::<Result<Vec<_>, _>>()
    };
    let provenance = Provenance::File {
        path: path.to_path_buf(),
        num: convert(&file.num)?,
        den: convert(&file.den)?,
    };
    // Reject malformed coefficients now rather than at build time.
    provenance.build()?;
    Ok(provenance)
}

fn number(field: &str, what: &str) -> Result<usize, CliError> {
    field.parse().map_err(|_| {
        CliError::usage(format!(
            "{what} must be a nonnegative integer, got {field:?}"
        ))
    })
}

pub fn parse_source(text: &str) -> Result<Provenance, CliError> {
    let (family, rest) = text
        .split_once(':')
        .ok_or_else(|| CliError::usage(format!("source {text:?} must look like family:args")))?;
    if family == "file" {
        return read_tf_file(&PathBuf::from(rest));
    }
    let parts: Vec<&str> = rest.split(':').collect();
    let provenance = match (family, parts.as_slice()) {
        ("pade", [n, m]) => Provenance::Pade {
            n: number(n, "n")?,
            m: number(m, "m")?,
        },
        ("budak", [m, n, gamma]) => Provenance::Budak {
            m: number(m, "m")?,
            n: number(n, "n")?,
            gamma: gamma.to_string(),
        },
        ("bessel", [n]) => Provenance::Bessel { n: number(n, "n")? },
        _ => {
            return Err(CliError::usage(format!(
                "unknown source {text:?}; expected pade:N:M, budak:M:N:GAMMA, bessel:N or file:PATH"
            )))
        }
    };
    provenance.build()?;
    Ok(provenance)
}
