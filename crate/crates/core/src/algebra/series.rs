use alloc::vec::Vec;
use core::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// The first `order` Maclaurin coefficients of some function. Arithmetic
/// results are truncated to the smaller order of the operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self {
            coeffs: (0..order).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    /// Index of the first nonzero coefficient at or after `from`.
    pub fn first_nonzero_from(&self, from: usize) -> Option<usize> {
        (from..self.coeffs.len()).find(|&k| !self.coeffs[k].is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..order)
            .map(|k| {
                (0..=k).fold(Rational::zero(), |acc, i| {
                    acc + &self.coeffs[i] * &rhs.coeffs[k - i]
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

/// First `terms` Maclaurin coefficients of `num / den` by exact long division.
pub fn series_of_ratio(
    num: &Polynomial,
    den: &Polynomial,
    terms: usize,
) -> Result<TruncatedSeries> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::SingularAtOrigin);
    }
    let inv = d0.recip();
    let mut out: Vec<Rational> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = num.coeff(k);
        for i in 1..=k.min(den.coeffs().len().saturating_sub(1)) {
            acc -= den.coeff(i) * &out[k - i];
        }
        out.push(acc * &inv);
    }
    Ok(TruncatedSeries::new(out))
}

/// Maclaurin coefficients of `e^{±s}`: `(±1)^k / k!`.
pub fn exp_series(negative: bool, terms: usize) -> TruncatedSeries {
    let mut out = Vec::with_capacity(terms);
    let mut term = Rational::one();
    for k in 0..terms {
        if k > 0 {
            term /= Rational::from_integer(BigInt::from(k));
            if negative {
                term = -term;
            }
        }
        out.push(term.clone());
    }
    TruncatedSeries::new(out)
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;
    use alloc::vec;

    #[test]
    fn geometric_series() {
        let s = series_of_ratio(&Polynomial::one(), &Polynomial::from_i64(&[1, 1]), 4).unwrap();
        assert_eq!(s.coeffs(), &[rat(1, 1), rat(-1, 1), rat(1, 1), rat(-1, 1)]);
    }

    #[test]
    fn ratio_of_equal_polys_is_one() {
        let p = Polynomial::from_i64(&[3, -1, 4, 1]);
        let s = series_of_ratio(&p, &p, 5).unwrap();
        assert_eq!(s.first_nonzero_from(1), None);
        assert_eq!(s.coeff(0), Some(&rat(1, 1)));
    }

    #[test]
    fn singular_at_origin_rejected() {
        assert_eq!(
            series_of_ratio(&Polynomial::one(), &Polynomial::from_i64(&[0, 1]), 3),
            Err(Error::SingularAtOrigin)
        );
    }

    #[test]
    fn exponential_series() {
        assert_eq!(
            exp_series(true, 4).coeffs(),
            &[rat(1, 1), rat(-1, 1), rat(1, 2), rat(-1, 6)]
        );
        assert_eq!(
            exp_series(false, 3).coeffs(),
            &[rat(1, 1), rat(1, 1), rat(1, 2)]
        );
        let prod = &exp_series(true, 8) * &exp_series(false, 8);
        assert_eq!(prod.coeff(0), Some(&rat(1, 1)));
        assert_eq!(prod.first_nonzero_from(1), None);
    }

    #[test]
    fn truncation_to_smaller_order() {
        let a = TruncatedSeries::new(vec![rat(1, 1), rat(2, 1), rat(3, 1)]);
        let b = TruncatedSeries::new(vec![rat(1, 1), rat(1, 1)]);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a - &b).coeffs(), &[rat(0, 1), rat(1, 1)]);
    }
}
