//! Frequency-domain quantities of a transfer function as exact rational
//! functions of `u = ω²`, and their maximal-flatness order at the origin.
//!
//! Writing `P(jω) = e(u) + jω·o(u)`, the phase derivative of a single
//! polynomial is
//!
//! ```text
//! ψ_P(u) = [e·o + 2u(e·o' − o·e')] / (e² + u·o²)
//! ```
//!
//! and the group delay of `N/D` is `ψ_D − ψ_N`.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{
    series_of_ratio, EvenRationalFunction, Polynomial, Rational, TransferFunction,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Delay,
    MagnitudeSquared,
}

/// The deviation `f(u) − f(0)` begins exactly at `u^order`, with coefficient
/// `leading_deviation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessReport {
    pub value_at_origin: Rational,
    pub order: usize,
    pub leading_deviation: Rational,
    pub quantity: Quantity,
}

/// `|P(jω)|²` as a polynomial in `u`, via `P(s)·P(−s)` and `s² ↦ −u`.
pub fn squared_modulus(p: &Polynomial) -> Polynomial {
    (p * &p.reflect()).even_to_half_degree().reflect()
}

/// `|H(jω)|²` in reduced form.
pub fn magnitude_squared(tf: &TransferFunction) -> EvenRationalFunction {
    EvenRationalFunction::new(
        squared_modulus(tf.numerator()),
        squared_modulus(tf.denominator()),
    )
    .expect("|D(jω)|² is a nonzero polynomial")
}

/// `(e, o)` with `P(jω) = e(ω²) + jω·o(ω²)`.
fn real_imag_parts(p: &Polynomial) -> (Polynomial, Polynomial) {
    let (even, odd) = p.even_odd_parts();
    (even.reflect(), odd.reflect())
}

/// Numerator and denominator of `ψ_P`.
fn phase_derivative(p: &Polynomial) -> (Polynomial, Polynomial) {
    let (e, o) = real_imag_parts(p);
    let u = Polynomial::x();
    let two_u = u.scale(&Rational::from_integer(2.into()));
    let cross = &(&e * &o.derivative()) - &(&o * &e.derivative());
    let num = &(&e * &o) + &(&two_u * &cross);
    let den = &(&e * &e) + &(&u * &(&o * &o));
    (num, den)
}

/// Unreduced group delay of `num/den`: numerator `ψ_D·|N|² − ψ_N·|D|²` over
/// `|D|²·|N|²` (with `ψ` numerators). Coefficients stay polynomial in any
/// parameter the inputs depend on polynomially.
pub fn group_delay_unreduced(
    num: &Polynomial,
    den: &Polynomial,
) -> Result<(Polynomial, Polynomial)> {
    if num.coeff(0).is_zero() || den.coeff(0).is_zero() {
        return Err(Error::PhaseUndefined);
    }
    let (pn, qn) = phase_derivative(num);
    let (pd, qd) = phase_derivative(den);
    let numerator = &(&pd * &qn) - &(&pn * &qd);
    let denominator = &qd * &qn;
    Ok((numerator, denominator))
}

/// `t_d(ω) = −d arg H(jω) / dω` in reduced form.
pub fn group_delay(tf: &TransferFunction) -> Result<EvenRationalFunction> {
    let (n, d) = group_delay_unreduced(tf.numerator(), tf.denominator())?;
    EvenRationalFunction::new(n, d)
}

/// Horizon that always contains the first nonzero deviation term of a
/// nonconstant reduced rational function.
pub fn default_horizon(f: &EvenRationalFunction) -> usize {
    2 * (f.numerator().degree().unwrap_or(0) + f.denominator().degree().unwrap_or(0)) + 4
}

pub fn flatness(
    f: &EvenRationalFunction,
    quantity: Quantity,
    max_terms: usize,
) -> Result<FlatnessReport> {
    let series = series_of_ratio(f.numerator(), f.denominator(), max_terms.max(1))?;
    let value_at_origin = series.coeffs()[0].clone();
    let order = series
        .first_nonzero_from(1)
        .ok_or(Error::FlatBeyondHorizon(max_terms))?;
    Ok(FlatnessReport {
        value_at_origin,
        order,
        leading_deviation: series.coeffs()[order].clone(),
        quantity,
    })
}

pub fn delay_flatness(tf: &TransferFunction) -> Result<FlatnessReport> {
    let f = group_delay(tf)?;
    flatness(&f, Quantity::Delay, default_horizon(&f))
}

pub fn magnitude_flatness(tf: &TransferFunction) -> Result<FlatnessReport> {
    let f = magnitude_squared(tf);
    flatness(&f, Quantity::MagnitudeSquared, default_horizon(&f))
}

/// Denominator magnitudes below this mark a sample as pole-adjacent.
pub const POLE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealSample {
    pub omega: f64,
    pub value: f64,
    pub pole_adjacent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexSample {
    pub omega: f64,
    pub value: Complex64,
    pub pole_adjacent: bool,
}

/// Double-precision evaluation of `f` at `u = ω²` for each `ω`.
pub fn sample_even(f: &EvenRationalFunction, omegas: &[f64]) -> Vec<RealSample> {
    omegas
        .iter()
        .map(|&omega| {
            let u = omega * omega;
            let d = f.denominator().eval_f64(u);
            RealSample {
                omega,
                value: f.numerator().eval_f64(u) / d,
                pole_adjacent: d.abs() < POLE_TOLERANCE,
            }
        })
        .collect()
}

/// Complex `H(jω)` for each `ω`.
pub fn sample_transfer(tf: &TransferFunction, omegas: &[f64]) -> Vec<ComplexSample> {
    omegas
        .iter()
        .map(|&omega| {
            let s = Complex64::new(0.0, omega);
            let d = tf.denominator().eval_complex(s);
            ComplexSample {
                omega,
                value: tf.numerator().eval_complex(s) / d,
                pole_adjacent: d.norm_sqr() < POLE_TOLERANCE * POLE_TOLERANCE,
            }
        })
        .collect()
}

/// Exact value of `f` at a rational `ω`, rounded to `f64`.
pub fn exact_value_f64(f: &EvenRationalFunction, omega: &Rational) -> Option<f64> {
    f.eval_at_omega(omega).and_then(|v| v.to_f64())
}
