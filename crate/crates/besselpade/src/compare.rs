//! Padé `(n, m)` against the Budak approximant `(m, n)` at both order-2 γ
//! values and against the all-pole Bessel function of degree `n`.

use std::fmt::Write as _;

use besselpade_core::algebra::surd_to_float;
use besselpade_core::budak::order2_design;
use besselpade_core::pade::{pade_exp, PadeIndex};
use besselpade_core::response::{delay_flatness, magnitude_flatness};
use besselpade_core::stability::{is_minimum_phase, pade_stability, routh_hurwitz, Verdict};
use serde::Serialize;

use crate::error::CliError;
use crate::report::{Provenance, REPORT_VERSION};

pub fn stability_label(v: Verdict) -> &'static str {
    match v {
        Verdict::StrictHurwitz => "Stable",
        Verdict::NotHurwitz => "Unstable",
        Verdict::Marginal => "Marginal",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaJson {
    pub exact: String,
    pub decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareRow {
    pub label: String,
    pub family: &'static str,
    pub gamma: Option<GammaJson>,
    pub delay_order: usize,
    pub magnitude_order: usize,
    /// `None` for the all-pole function, which has no finite zeros.
    pub minimum_phase: Option<bool>,
    pub stability: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub report_version: u32,
    pub n: usize,
    pub m: usize,
    pub rows: Vec<CompareRow>,
}

pub fn compare(n: usize, m: usize, precision: usize) -> Result<CompareReport, CliError> {
    if m == 0 || m >= n {
        return Err(CliError::usage(format!(
            "compare needs 1 <= m < n, got n={n}, m={m}"
        )));
    }
    let mut rows = Vec::with_capacity(4);

    let idx = PadeIndex::new(n, m);
    let pade = pade_exp(idx);
    rows.push(CompareRow {
        label: format!("Pade ({n},{m})"),
        family: "pade",
        gamma: None,
        delay_order: delay_flatness(&pade)?.order,
        magnitude_order: magnitude_flatness(&pade)?.order,
        minimum_phase: Some(is_minimum_phase(&pade)),
        stability: stability_label(pade_stability(idx)?.verdict),
    });

    for branch in order2_design(n, m)? {
        let decimal = surd_to_float(&branch.gamma, precision)?;
        rows.push(CompareRow {
            label: format!("Budak ({m},{n}) gamma≈{decimal}"),
            family: "budak",
            gamma: Some(GammaJson {
                exact: branch.gamma.to_string(),
                decimal,
            }),
            delay_order: branch.delay_order,
            magnitude_order: branch.magnitude_order,
            minimum_phase: Some(branch.minimum_phase),
            stability: stability_label(branch.stability),
        });
    }

    let all_pole = Provenance::Bessel { n }.build()?;
    rows.push(CompareRow {
        label: format!("all-pole Bessel ({n})"),
        family: "bessel",
        gamma: None,
        delay_order: delay_flatness(&all_pole)?.order,
        magnitude_order: magnitude_flatness(&all_pole)?.order,
        minimum_phase: None,
        stability: stability_label(routh_hurwitz(all_pole.denominator())?.verdict),
    });

    Ok(CompareReport {
        report_version: REPORT_VERSION,
        n,
        m,
        rows,
    })
}

impl CompareReport {
    pub fn to_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.label.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  delay  magnitude  min-phase  stability",
            "approximant"
        );
        for r in &self.rows {
            let mp = match r.minimum_phase {
                Some(true) => "yes",
                Some(false) => "no",
                None => "—",
            };
            let pad = width - r.label.chars().count();
            let _ = writeln!(
                out,
                "{}{}  {:>5}  {:>9}  {:<9}  {}",
                r.label,
                " ".repeat(pad),
                r.delay_order,
                r.magnitude_order,
                mp,
                r.stability
            );
        }
        out
    }
}
