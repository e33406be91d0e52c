use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::rational::{pow10, Rational};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    /// Endpoints are swapped if given out of order.
    pub fn new(a: Rational, b: Rational) -> Self {
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn disjoint(&self, other: &Self) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// `Less`/`Greater` when the whole interval lies strictly below/above `x`;
    /// `Equal` when the position is undecided.
    pub fn compare_to(&self, x: &Rational) -> Ordering {
        if &self.hi < x {
            Ordering::Less
        } else if &self.lo > x {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    /// Image under a map that is monotone on this interval.
    pub fn map_monotone(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self::new(f(&self.lo), f(&self.hi))
    }

    /// Integer power, valid for intervals with `lo ≥ 0`.
    pub fn pow_nonneg(&self, e: usize) -> Self {
        debug_assert!(!self.lo.is_negative());
        self.map_monotone(|x| num_traits::pow(x.clone(), e))
    }
}

/// Enclosure of `x^{1/k}` for rational `x ≥ 0` with width at most `10^{-digits}`.
pub fn nth_root_enclosure(x: &Rational, k: u32, digits: u32) -> RationalInterval {
    assert!(!x.is_negative() && k >= 1);
    let scale = pow10(digits);
    let scaled = x * Rational::from_integer(num_traits::pow(scale.clone(), k as usize));
    let r = scaled.floor().to_integer().nth_root(k);
    let lo = Rational::new(r.clone(), scale.clone());
    // Exact root: collapse to a point.
    let hi = if Rational::from_integer(num_traits::pow(r.clone(), k as usize)) == scaled {
        lo.clone()
    } else {
        Rational::new(r + BigInt::one(), scale)
    };
    RationalInterval::new(lo, hi)
}
