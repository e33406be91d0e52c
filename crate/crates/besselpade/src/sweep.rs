//! Double-precision frequency sweeps written as CSV.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use besselpade_core::algebra::TransferFunction;
use besselpade_core::response::{group_delay, magnitude_squared, sample_even, sample_transfer};
use tempfile::NamedTempFile;

use crate::error::CliError;

pub const CSV_HEADER: &str = "omega,magnitude,phase_rad,group_delay";
pub const POLE_MARK: &str = "# pole-adjacent";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub omega: f64,
    /// `|H(jω)|`, the square root of the exact squared magnitude.
    pub magnitude: f64,
    /// Unwrapped `arg H(jω)`.
    pub phase_rad: f64,
    /// NaN where the phase is undefined at the origin.
    pub group_delay: f64,
    pub pole_adjacent: bool,
}

pub fn omega_grid(omega_max: f64, points: usize) -> Result<Vec<f64>, CliError> {
    if !(omega_max.is_finite() && omega_max > 0.0) {
        return Err(CliError::usage(format!(
            "omega-max must be positive, got {omega_max}"
        )));
    }
    if points < 2 {
        return Err(CliError::usage(format!(
            "points must be at least 2, got {points}"
        )));
    }
    let last = (points - 1) as f64;
    Ok((0..points).map(|i| omega_max * i as f64 / last).collect())
}

fn unwrap_phase(raw: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    let mut offset = 0.0;
    let mut prev: Option<f64> = None;
    for p in raw {
        if let (Some(q), true) = (prev, p.is_finite()) {
            let mut d = p - q;
            while d > PI {
                d -= 2.0 * PI;
                offset -= 2.0 * PI;
            }
            while d < -PI {
                d += 2.0 * PI;
                offset += 2.0 * PI;
            }
        }
        if p.is_finite() {
            prev = Some(p);
        }
        out.push(p + offset);
    }
    out
}

pub fn sweep(tf: &TransferFunction, omegas: &[f64]) -> Vec<SweepRow> {
    let mag = sample_even(&magnitude_squared(tf), omegas);
    let delay = group_delay(tf).ok().map(|f| sample_even(&f, omegas));
    let h = sample_transfer(tf, omegas);
    let phase = unwrap_phase(h.iter().map(|s| s.value.arg()));
    omegas
        .iter()
        .enumerate()
        .map(|(i, &omega)| SweepRow {
            omega,
            magnitude: mag[i].value.sqrt(),
            phase_rad: phase[i],
            group_delay: delay.as_ref().map_or(f64::NAN, |d| d[i].value),
            pole_adjacent: h[i].pole_adjacent || mag[i].pole_adjacent,
        })
        .collect()
}

/// Shortest round-trip rendering, independent of locale.
fn number(x: f64) -> String {
    format!("{x:?}")
}

pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = write!(
            out,
            "{},{},{},{}",
            number(r.omega),
            number(r.magnitude),
            number(r.phase_rad),
            number(r.group_delay)
        );
        if r.pole_adjacent {
            out.push(',');
            out.push_str(POLE_MARK);
        }
        out.push('\n');
    }
    out
}

/// Writes via a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let wrap = |source| CliError::Write {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(wrap)?;
    tmp.write_all(contents.as_bytes()).map_err(wrap)?;
    tmp.as_file().sync_all().map_err(wrap)?;
    tmp.persist(path).map_err(|e| wrap(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unwrapping_removes_jumps() {
        let raw = [3.0, -3.0, -2.5, 2.9];
        let u = unwrap_phase(raw);
        assert!((u[1] - (-3.0 + 2.0 * PI)).abs() < 1e-15);
        assert!((u[3] - (2.9)).abs() < 1e-15 || (u[3] - u[2]).abs() < PI);
        for w in u.windows(2) {
            assert!((w[1] - w[0]).abs() <= PI);
        }
    }

    #[test]
    fn grid_validation() {
        assert!(omega_grid(0.0, 10).is_err());
        assert!(omega_grid(1.0, 1).is_err());
        assert_eq!(omega_grid(2.0, 3).unwrap(), vec![0.0, 1.0, 2.0]);
    }
}
