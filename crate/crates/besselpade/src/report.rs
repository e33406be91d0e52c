//! JSON-facing views of the core types and the full design report.
//!
//! Every rational is written as an exact `"p/q"` (or `"p"`) string. Field
//! order in each struct is the key order of the emitted JSON.

use std::fmt::Write as _;
use std::path::PathBuf;

use besselpade_core::algebra::{parse_rational, Polynomial, Rational, TransferFunction};
use besselpade_core::budak::{budak_tf, BudakParams};
use besselpade_core::gbp::classical_bessel;
use besselpade_core::pade::{pade_exp, PadeIndex};
use besselpade_core::response::{delay_flatness, magnitude_flatness, FlatnessReport, Quantity};
use besselpade_core::stability::{is_minimum_phase, routh_hurwitz, StabilityReport, Verdict};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const REPORT_VERSION: u32 = 1;

pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

pub fn coefficient_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(rational_string).collect()
}

pub fn parse_coefficients(values: &[String]) -> Result<Polynomial, CliError> {
    values
        .iter()
        .map(|v| parse_rational(v).ok_or_else(|| CliError::usage(format!("not a rational: {v:?}"))))
        .collect::<Result<Vec<_>, _>>()
        .map(Polynomial::new)
}

/// Transfer function as ascending coefficient lists. The same object is the
/// transfer-function file format (`display` is ignored when reading).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TfJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
    #[serde(default, skip_deserializing)]
    pub display: String,
}

impl TfJson {
    pub fn from_tf(tf: &TransferFunction) -> Self {
        Self {
            num: coefficient_strings(tf.numerator()),
            den: coefficient_strings(tf.denominator()),
            display: tf.to_string(),
        }
    }

    pub fn to_tf(&self) -> Result<TransferFunction, CliError> {
        let num = parse_coefficients(&self.num)?;
        let den = parse_coefficients(&self.den)?;
        TransferFunction::new(num, den)
            .map_err(|e| CliError::usage(format!("invalid transfer function: {e}")))
    }
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::StrictHurwitz => "StrictHurwitz",
        Verdict::NotHurwitz => "NotHurwitz",
        Verdict::Marginal => "Marginal",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityJson {
    pub verdict: &'static str,
    pub routh_first_column: Vec<String>,
    pub sign_changes: usize,
    pub degenerate_rows: Vec<usize>,
}

impl From<&StabilityReport> for StabilityJson {
    fn from(r: &StabilityReport) -> Self {
        Self {
            verdict: verdict_name(r.verdict),
            routh_first_column: r.routh_first_column.iter().map(rational_string).collect(),
            sign_changes: r.sign_changes,
            degenerate_rows: r.degenerate_rows.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessJson {
    pub quantity: &'static str,
    pub value_at_origin: String,
    pub order: usize,
    pub leading_deviation: String,
}

impl From<&FlatnessReport> for FlatnessJson {
    fn from(r: &FlatnessReport) -> Self {
        Self {
            quantity: match r.quantity {
                Quantity::Delay => "delay",
                Quantity::MagnitudeSquared => "magnitude_squared",
            },
            value_at_origin: rational_string(&r.value_at_origin),
            order: r.order,
            leading_deviation: rational_string(&r.leading_deviation),
        }
    }
}

/// How a transfer function was constructed; enough to rebuild it exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Provenance {
    Pade {
        n: usize,
        m: usize,
    },
    Budak {
        m: usize,
        n: usize,
        gamma: String,
    },
    /// All-pole `θ_n(0) / θ_n(s)` with the classical Bessel polynomial.
    Bessel {
        n: usize,
    },
    /// Explicit coefficients, e.g. read from a transfer-function file.
    File {
        path: PathBuf,
        num: Vec<String>,
        den: Vec<String>,
    },
}

impl Provenance {
    pub fn build(&self) -> Result<TransferFunction, CliError> {
        match self {
            Provenance::Pade { n, m } => Ok(pade_exp(PadeIndex::new(*n, *m))),
            Provenance::Budak { m, n, gamma } => {
                let g = parse_rational(gamma).ok_or_else(|| {
                    CliError::usage(format!("gamma is not a rational: {gamma:?}"))
                })?;
                let params =
                    BudakParams::new(*m, *n, g).map_err(|e| CliError::usage(e.to_string()))?;
                Ok(budak_tf(&params)?)
            }
            Provenance::Bessel { n } => {
                let den = classical_bessel(*n);
                let num = Polynomial::constant(den.coeff(0));
                Ok(TransferFunction::new(num, den)?)
            }
            Provenance::File { num, den, .. } => TfJson {
                num: num.clone(),
                den: den.clone(),
                display: String::new(),
            }
            .to_tf(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Provenance::Pade { n, m } => format!("Pade ({n},{m})"),
            Provenance::Budak { m, n, gamma } => format!("Budak (m={m}, n={n}, gamma={gamma})"),
            Provenance::Bessel { n } => format!("all-pole Bessel (n={n})"),
            Provenance::File { path, .. } => format!("file {}", path.display()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub report_version: u32,
    pub provenance: Provenance,
    pub tf: TfJson,
    /// Absent for a constant denominator.
    pub stability: Option<StabilityJson>,
    /// Absent when the phase is undefined at the origin or the delay is constant.
    pub delay_flatness: Option<FlatnessJson>,
    /// Absent when the magnitude is constant.
    pub magnitude_flatness: Option<FlatnessJson>,
    pub minimum_phase: bool,
}

impl DesignReport {
    pub fn new(provenance: Provenance) -> Result<Self, CliError> {
        let tf = provenance.build()?;
        let stability = match tf.denominator().degree() {
            Some(d) if d >= 1 => Some(StabilityJson::from(&routh_hurwitz(tf.denominator())?)),
            _ => None,
        };
        Ok(Self {
            report_version: REPORT_VERSION,
            tf: TfJson::from_tf(&tf),
            stability,
            delay_flatness: delay_flatness(&tf).ok().as_ref().map(FlatnessJson::from),
            magnitude_flatness: magnitude_flatness(&tf)
                .ok()
                .as_ref()
                .map(FlatnessJson::from),
            minimum_phase: is_minimum_phase(&tf),
            provenance,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "design: {}", self.provenance.describe());
        let _ = writeln!(out, "H(s) = {}", self.tf.display);
        match &self.stability {
            Some(s) => {
                let _ = writeln!(
                    out,
                    "stability: {} (Routh first column [{}], sign changes {}{})",
                    s.verdict,
                    s.routh_first_column.join(", "),
                    s.sign_changes,
                    if s.degenerate_rows.is_empty() {
                        String::new()
                    } else {
                        format!(", degenerate rows {:?}", s.degenerate_rows)
                    }
                );
            }
            None => out.push_str("stability: constant denominator\n"),
        }
        for (name, f) in [
            ("delay", &self.delay_flatness),
            ("magnitude^2", &self.magnitude_flatness),
        ] {
            match f {
                Some(f) => {
                    let _ = writeln!(
                        out,
                        "{name} flatness: order {}, value at origin {}, leading deviation {}",
                        f.order, f.value_at_origin, f.leading_deviation
                    );
                }
                None => {
                    let _ = writeln!(out, "{name} flatness: undefined");
                }
            }
        }
        let _ = writeln!(
            out,
            "minimum phase: {}",
            if self.minimum_phase { "yes" } else { "no" }
        );
        out
    }
}
