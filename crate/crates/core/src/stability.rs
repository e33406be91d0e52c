//! Exact Routh–Hurwitz classification.
//!
//! The Routh array is built over the rationals. A row that vanishes entirely
//! is replaced by the derivative of the auxiliary polynomial formed from the
//! row above it. A zero pivot in a nonzero row stops the array.
//!
//! Whenever the array degenerates, the verdict comes from an exact
//! decomposition instead. Repeatedly splitting off `gcd(p(s), p(-s))` isolates
//! every root pair `{r, -r}`, including all imaginary-axis roots. The
//! remaining factor has no such pairs, so any trouble there means a root in the
//! open right half-plane. Each split-off factor is even or odd, and a Sturm
//! count in `v = s²` decides whether all of its roots lie on the axis.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::algebra::{poly_gcd, Polynomial, Rational, TransferFunction};
use crate::error::{Error, Result};
use crate::gbp::{gbp, GbpParams};
use crate::pade::{pade_exp, PadeIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Every root strictly in the open left half-plane.
    StrictHurwitz,
    /// At least one root with positive real part.
    NotHurwitz,
    /// Roots on the imaginary axis, none strictly to the right.
    Marginal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub routh_first_column: Vec<Rational>,
    pub sign_changes: usize,
    /// Row indices (row `i` holds powers `s^{deg-i}`, `s^{deg-i-2}`, ...) where
    /// a zero row or a zero pivot occurred.
    pub degenerate_rows: Vec<usize>,
}

struct RouthArray {
    first_column: Vec<Rational>,
    degenerate_rows: Vec<usize>,
}

fn build_routh(p: &Polynomial) -> RouthArray {
    let d = p.degree().expect("caller checks degree");
    let c = p.coeffs();
    let row_from = |start: usize| -> Vec<Rational> {
        (0..=d)
            .rev()
            .skip(start)
            .step_by(2)
            .map(|k| c[k].clone())
            .collect()
    };
    let mut prev = row_from(0);
    let mut cur = row_from(1);
    let mut first_column = vec![prev[0].clone()];
    let mut degenerate_rows = Vec::new();
    for i in 1..=d {
        let width = (d - i) / 2 + 1;
        cur.resize(width, Rational::zero());
        if cur.iter().all(Zero::is_zero) {
            degenerate_rows.push(i);
            // Auxiliary polynomial from row i-1 has powers d-i+1, d-i-1, ...
            let top = d - i + 1;
            cur = (0..width)
                .map(|j| {
                    let power = top as i64 - 2 * j as i64;
                    prev.get(j).cloned().unwrap_or_else(Rational::zero)
                        * Rational::from_integer(power.max(0).into())
                })
                .collect();
        }
        if cur[0].is_zero() {
            degenerate_rows.push(i);
            first_column.push(Rational::zero());
            break;
        }
        first_column.push(cur[0].clone());
        if i == d {
            break;
        }
        let next_width = (d - i - 1) / 2 + 1;
        let next: Vec<Rational> = (0..next_width)
            .map(|j| {
                let a = prev.get(j + 1).cloned().unwrap_or_else(Rational::zero);
                let b = cur.get(j + 1).cloned().unwrap_or_else(Rational::zero);
                (&cur[0] * a - &prev[0] * b) / &cur[0]
            })
            .collect();
        prev = core::mem::replace(&mut cur, next);
    }
    RouthArray {
        first_column,
        degenerate_rows,
    }
}

fn count_sign_changes(values: &[Rational]) -> usize {
    values
        .iter()
        .filter(|v| !v.is_zero())
        .map(Signed::is_positive)
        .collect::<Vec<_>>()
        .windows(2)
        .filter(|w| w[0] != w[1])
        .count()
}

/// Routh–Hurwitz report for a polynomial of degree at least one.
pub fn routh_hurwitz(p: &Polynomial) -> Result<StabilityReport> {
    match p.degree() {
        None | Some(0) => return Err(Error::DegreeTooLow),
        _ => {}
    }
    let p = if p.leading().is_some_and(Signed::is_negative) {
        -p
    } else {
        p.clone()
    };
    let array = build_routh(&p);
    let sign_changes = count_sign_changes(&array.first_column);
    let verdict = if array.degenerate_rows.is_empty() {
        if sign_changes == 0 {
            Verdict::StrictHurwitz
        } else {
            Verdict::NotHurwitz
        }
    } else {
        let v = classify_exact(&p);
        debug_assert_ne!(v, Verdict::StrictHurwitz);
        if v == Verdict::StrictHurwitz {
            Verdict::Marginal
        } else {
            v
        }
    };
    Ok(StabilityReport {
        verdict,
        routh_first_column: array.first_column,
        sign_changes,
        degenerate_rows: array.degenerate_rows,
    })
}

/// Root-location classification that never relies on a nondegenerate array.
fn classify_exact(p: &Polynomial) -> Verdict {
    let mut rest = p.clone();
    let mut symmetric = Vec::new();
    loop {
        let g = poly_gcd(&rest, &rest.reflect()).expect("rest is nonzero");
        if g.degree() == Some(0) {
            break;
        }
        rest = rest.div_rem(&g).expect("g nonzero").0;
        symmetric.push(g);
    }
    if rest.degree().unwrap_or(0) >= 1 {
        let rest = if rest.leading().is_some_and(Signed::is_negative) {
            -&rest
        } else {
            rest
        };
        let array = build_routh(&rest);
        if !array.degenerate_rows.is_empty() || count_sign_changes(&array.first_column) > 0 {
            return Verdict::NotHurwitz;
        }
    }
    if symmetric.iter().all(all_roots_on_axis) {
        if symmetric.is_empty() {
            Verdict::StrictHurwitz
        } else {
            Verdict::Marginal
        }
    } else {
        Verdict::NotHurwitz
    }
}

/// For an even or odd polynomial `g`: are all its roots purely imaginary (or zero)?
fn all_roots_on_axis(g: &Polynomial) -> bool {
    let mut g = g.clone();
    if g.is_odd() {
        g = g.div_rem(&Polynomial::x()).expect("x nonzero").0;
    }
    debug_assert!(g.is_even());
    // g(s) = E(s²); axis roots s = iy give v = s² = -y² ≤ 0.
    let mut e = g.even_to_half_degree();
    while !e.is_zero() && e.coeff(0).is_zero() {
        e = e.div_rem(&Polynomial::x()).expect("x nonzero").0;
    }
    let deg = e.degree().unwrap_or(0);
    if deg == 0 {
        return true;
    }
    let sf = square_free(&e);
    let sf_deg = sf.degree().unwrap_or(0);
    // Every distinct root of E must be real and negative.
    sturm_count_negative(&sf) == sf_deg
}

fn square_free(p: &Polynomial) -> Polynomial {
    let g = poly_gcd(p, &p.derivative()).expect("p nonzero");
    p.div_rem(&g).expect("g nonzero").0
}

fn sign_of(x: &Rational) -> Ordering {
    x.cmp(&Rational::zero())
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let s: Vec<Ordering> = signs.filter(|o| *o != Ordering::Equal).collect();
    s.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(-∞, 0)` of a square-free `p` with `p(0) ≠ 0`.
fn sturm_count_negative(p: &Polynomial) -> usize {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    let at_neg_inf = variations(chain.iter().map(|q| {
        let lead = sign_of(q.leading().expect("nonzero"));
        if q.degree().unwrap_or(0) % 2 == 1 {
            lead.reverse()
        } else {
            lead
        }
    }));
    let at_zero = variations(chain.iter().map(|q| sign_of(&q.coeff(0))));
    at_neg_inf - at_zero
}

/// `true` when the polynomial is nonzero and all its roots lie in the closed
/// left half-plane (constants count as minimum phase).
pub fn closed_left_half_plane(p: &Polynomial) -> bool {
    match p.degree() {
        None => false,
        Some(0) => true,
        Some(_) => routh_hurwitz(p).is_ok_and(|r| r.verdict != Verdict::NotHurwitz),
    }
}

/// Minimum phase: no zeros in the open right half-plane.
pub fn is_minimum_phase(tf: &TransferFunction) -> bool {
    closed_left_half_plane(tf.numerator())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridViolation {
    pub n: usize,
    pub alpha: Rational,
    pub beta: Rational,
    pub verdict: Verdict,
}

/// Checks the sufficient Hurwitz condition `α ≥ 0, β > 0` over a grid of
/// degrees `1..=n_max`. Points with `α > 0`, or `α = 0` and `n ≥ 2`, must be
/// strictly Hurwitz. The boundary point `n = 1, α = 0` is `B_1 = s` and only
/// has to avoid `NotHurwitz`. Returns the violations; the expected answer is
/// an empty list.
pub fn hurwitz_grid(
    n_max: usize,
    alphas: &[Rational],
    betas: &[Rational],
) -> Result<Vec<GridViolation>> {
    if let Some(b) = betas.iter().find(|b| !b.is_positive()) {
        return Err(Error::InvalidGrid(alloc::format!(
            "beta {b} is not positive"
        )));
    }
    if let Some(a) = alphas.iter().find(|a| a.is_negative()) {
        return Err(Error::InvalidGrid(alloc::format!("alpha {a} is negative")));
    }
    let mut violations = Vec::new();
    for n in 1..=n_max {
        for alpha in alphas {
            for beta in betas {
                let p = gbp(&GbpParams::new(n, alpha.clone(), beta.clone())?)?;
                let verdict = routh_hurwitz(&p)?.verdict;
                let strict_required = alpha.is_positive() || n >= 2;
                let ok = if strict_required {
                    verdict == Verdict::StrictHurwitz
                } else {
                    verdict != Verdict::NotHurwitz
                };
                if !ok {
                    violations.push(GridViolation {
                        n,
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        verdict,
                    });
                }
            }
        }
    }
    Ok(violations)
}

/// Routh–Hurwitz report of the canonical Padé denominator (`n ≥ 1`).
pub fn pade_stability(idx: PadeIndex) -> Result<StabilityReport> {
    routh_hurwitz(pade_exp(idx).denominator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn verdict(c: &[i64]) -> Verdict {
        routh_hurwitz(&p(c)).unwrap().verdict
    }

    #[test]
    fn pade_denominators() {
        let r = routh_hurwitz(&p(&[60, 36, 9, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::StrictHurwitz);
        assert_eq!(r.sign_changes, 0);
        assert!(r.degenerate_rows.is_empty());
        // Row s^2 of the (5,0) denominator has a zero pivot: 1, 5, 8, 0.
        let r = routh_hurwitz(&p(&[120, 120, 60, 20, 5, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::NotHurwitz);
        assert_eq!(r.degenerate_rows, alloc::vec![3]);
        assert_eq!(
            r.routh_first_column,
            alloc::vec![rat(1, 1), rat(5, 1), rat(8, 1), rat(0, 1)]
        );
    }

    #[test]
    fn marginal_cases() {
        assert_eq!(verdict(&[0, 1]), Verdict::Marginal);
        assert_eq!(verdict(&[1, 0, 1]), Verdict::Marginal);
        // (s+1)(s^2+1)
        assert_eq!(verdict(&[1, 1, 1, 1]), Verdict::Marginal);
        // (s+1)(s^2+1)^2
        assert_eq!(verdict(&[1, 1, 2, 2, 1, 1]), Verdict::Marginal);
        // s(s+2)
        assert_eq!(verdict(&[0, 2, 1]), Verdict::Marginal);
        let r = routh_hurwitz(&p(&[1, 0, 1])).unwrap();
        assert_eq!(r.degenerate_rows, alloc::vec![1]);
    }

    #[test]
    fn unstable_degenerate_cases() {
        assert_eq!(verdict(&[-1, 0, 1]), Verdict::NotHurwitz);
        assert_eq!(verdict(&[-1, 0, 0, 0, 1]), Verdict::NotHurwitz);
        // zero pivot, no symmetric roots
        assert_eq!(verdict(&[3, 2, 2, 1, 1]), Verdict::NotHurwitz);
        // s^4 + 1: symmetric, off-axis roots
        assert_eq!(verdict(&[1, 0, 0, 0, 1]), Verdict::NotHurwitz);
        // (s-1)(s^2+1)
        assert_eq!(verdict(&[-1, 1, -1, 1]), Verdict::NotHurwitz);
    }

    #[test]
    fn negative_leading_coefficient_is_normalized() {
        assert_eq!(verdict(&[-2, -3, -1]), Verdict::StrictHurwitz);
    }

    #[test]
    fn degree_zero_rejected() {
        assert_eq!(routh_hurwitz(&p(&[5])), Err(Error::DegreeTooLow));
        assert_eq!(routh_hurwitz(&Polynomial::zero()), Err(Error::DegreeTooLow));
    }

    #[test]
    fn grid_boundary() {
        let v = hurwitz_grid(2, &[rat(0, 1)], &[rat(1, 1)]).unwrap();
        assert!(v.is_empty());
        let b1 = gbp(&GbpParams::new(1, rat(0, 1), rat(1, 1)).unwrap()).unwrap();
        assert_eq!(routh_hurwitz(&b1).unwrap().verdict, Verdict::Marginal);
        assert!(hurwitz_grid(2, &[rat(-1, 1)], &[rat(1, 1)]).is_err());
        assert!(hurwitz_grid(2, &[rat(1, 1)], &[rat(0, 1)]).is_err());
    }

    #[test]
    fn pade_stability_witnesses() {
        assert_eq!(
            pade_stability(PadeIndex::new(3, 2)).unwrap().verdict,
            Verdict::StrictHurwitz
        );
        assert_eq!(
            pade_stability(PadeIndex::new(5, 0)).unwrap().verdict,
            Verdict::NotHurwitz
        );
        let r = pade_stability(PadeIndex::new(4, 1)).unwrap();
        assert_eq!(r.verdict, Verdict::StrictHurwitz);
        let expected: Vec<Rational> = [1, 8, 24, 56, 120].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(r.routh_first_column, expected);
    }

    #[test]
    fn minimum_phase() {
        let tf = pade_exp(PadeIndex::new(3, 2));
        assert!(!is_minimum_phase(&tf));
        let lp = TransferFunction::new(p(&[1]), p(&[1, 1])).unwrap();
        assert!(is_minimum_phase(&lp));
    }
}
