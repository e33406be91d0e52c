//! Generalized Bessel polynomials
//!
//! ```text
//! B_n(s, α, β) = Σ_{k=0}^{n} C(n,k) · (n+k+α-2)^{(k)} / β^k · s^{n-k}
//! ```
//!
//! where `(q)^{(k)}` is the falling factorial. The `k = 0` term supplies the
//! monic head `s^n`. `β` only rescales the variable:
//! `β^n B_n(s, α, β) = B_n(β s, α, 1)`.

use alloc::vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{binomial, falling_factorial, Polynomial, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GbpParams {
    pub n: usize,
    pub alpha: Rational,
    pub beta: Rational,
}

impl GbpParams {
    pub fn new(n: usize, alpha: Rational, beta: Rational) -> Result<Self> {
        if beta.is_zero() {
            return Err(Error::ZeroBeta);
        }
        Ok(Self { n, alpha, beta })
    }
}

/// `B_n(s, α, β)`, always monic of degree `n`.
pub fn gbp(params: &GbpParams) -> Result<Polynomial> {
    let GbpParams { n, alpha, beta } = params;
    let n = *n;
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    let beta_inv = beta.recip();
    let mut beta_pow = Rational::one();
    for k in 0..=n {
        let q = Rational::from_integer(BigInt::from(n + k) - 2) + alpha;
        let c = Rational::from_integer(binomial(n, k)) * falling_factorial(&q, k) * &beta_pow;
        coeffs[n - k] = c;
        beta_pow *= &beta_inv;
    }
    Ok(Polynomial::new(coeffs))
}

/// Classical Bessel polynomial of filter theory, `B_n(s, 2, 2)`.
pub fn classical_bessel(n: usize) -> Polynomial {
    let two = Rational::from_integer(2.into());
    gbp(&GbpParams {
        n,
        alpha: two.clone(),
        beta: two,
    })
    .expect("beta = 2 is nonzero")
}

/// Coefficient-positivity necessary condition for the Hurwitz property:
/// `α > 1 - n` and `β > 0`. For `n = 0` the polynomial is the constant 1 and
/// the condition holds trivially.
pub fn positivity_necessary(params: &GbpParams) -> bool {
    if params.n == 0 {
        return true;
    }
    let bound = Rational::one() - Rational::from_integer(BigInt::from(params.n));
    params.alpha > bound && params.beta.is_positive()
}
