//! Padé approximants `(n, m) = Q_nm(s) / P_nm(s)` of `e^{-s}`.
//!
//! Two independent constructions are provided: the explicit factorial sums
//! ([`pade_exp`]) and the generalized-Bessel form ([`pade_via_gbp`]), in which
//! the numerator is `B_m(-s, n-m+2, 1)` and the denominator `B_n(s, m-n+2, 1)`.

use alloc::vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{
    binomial, exp_series, factorial, Polynomial, Rational, TransferFunction, TruncatedSeries,
};
use crate::gbp::{gbp, GbpParams};

/// `n` is the denominator degree, `m` the numerator degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PadeIndex {
    pub n: usize,
    pub m: usize,
}

impl PadeIndex {
    pub fn new(n: usize, m: usize) -> Self {
        Self { n, m }
    }
}

fn ratio(num: BigInt, den: BigInt) -> Rational {
    Rational::new(num, den)
}

/// `Q_nm(s) = n!/(n+m)! Σ_{k=0}^{m} C(m,k) (n+k)!/n! (-s)^{m-k}`
pub fn pade_numerator(idx: PadeIndex) -> Polynomial {
    let PadeIndex { n, m } = idx;
    let mut coeffs = vec![Rational::zero(); m + 1];
    for k in 0..=m {
        let power = m - k;
        let mut c = ratio(binomial(m, k) * factorial(n + k), factorial(n + m));
        if power % 2 == 1 {
            c = -c;
        }
        coeffs[power] = c;
    }
    Polynomial::new(coeffs)
}

/// `P_nm(s) = m!/(n+m)! Σ_{k=0}^{n} C(n,k) (m+k)!/m! s^{n-k}`
pub fn pade_denominator(idx: PadeIndex) -> Polynomial {
    let PadeIndex { n, m } = idx;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = ratio(binomial(n, k) * factorial(m + k), factorial(n + m));
    }
    Polynomial::new(coeffs)
}

/// Padé approximant from the explicit factorial sums, in canonical form.
pub fn pade_exp(idx: PadeIndex) -> TransferFunction {
    TransferFunction::new(pade_numerator(idx), pade_denominator(idx))
        .expect("P_nm has a nonzero constant term")
}

/// Padé approximant assembled from generalized Bessel polynomials:
/// `n!/(n+m)! · B_m(-s, n-m+2, 1)` over `m!/(n+m)! · B_n(s, m-n+2, 1)`.
pub fn pade_via_gbp(idx: PadeIndex) -> TransferFunction {
    let PadeIndex { n, m } = idx;
    let one = Rational::from_integer(1.into());
    let delta = Rational::from_integer(BigInt::from(n) - BigInt::from(m) + 2);
    let alpha = Rational::from_integer(BigInt::from(m) - BigInt::from(n) + 2);
    let num_gbp = gbp(&GbpParams {
        n: m,
        alpha: delta,
        beta: one.clone(),
    })
    .expect("beta = 1");
    let den_gbp = gbp(&GbpParams {
        n,
        alpha,
        beta: one,
    })
    .expect("beta = 1");
    let num = num_gbp
        .reflect()
        .scale(&ratio(factorial(n), factorial(n + m)));
    let den = den_gbp.scale(&ratio(factorial(m), factorial(n + m)));
    TransferFunction::new(num, den).expect("B_n(0) is nonzero")
}

/// Maclaurin series of `Q_nm(s) - e^{-s} P_nm(s)` through `terms` coefficients.
pub fn pade_residual_series(idx: PadeIndex, terms: usize) -> TruncatedSeries {
    let q = TruncatedSeries::from_polynomial(&pade_numerator(idx), terms);
    let p = TruncatedSeries::from_polynomial(&pade_denominator(idx), terms);
    &q - &(&exp_series(true, terms) * &p)
}

/// Index of the first nonzero coefficient of `Q_nm - e^{-s} P_nm`; equals
/// `n + m + 1` for every Padé approximant. `None` if all `terms` vanish.
pub fn pade_order_defect(idx: PadeIndex, terms: usize) -> Option<usize> {
    pade_residual_series(idx, terms).first_nonzero_from(0)
}
