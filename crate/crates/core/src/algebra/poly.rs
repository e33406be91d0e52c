use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree order. The zero polynomial has no coefficients; otherwise
/// the last stored coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Leading coefficient normalized to one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, x: num_complex::Complex64) -> num_complex::Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| {
                acc * x + c.to_f64().unwrap_or(f64::NAN)
            })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Splits `p(x) = E(x²) + x·O(x²)` and returns `(E, O)`.
    pub fn even_odd_parts(&self) -> (Self, Self) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (Self::new(even), Self::new(odd))
    }

    /// Keeps only `x^{2k}` terms and re-indexes them as `y^k`. Odd terms are
    /// discarded; callers use it on even polynomials.
    pub fn even_to_half_degree(&self) -> Self {
        self.even_odd_parts().0
    }

    /// `p(x²)`
    pub fn compose_square(&self) -> Self {
        let mut coeffs = vec![Rational::zero(); 2 * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Composition `self(inner)` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        let inv = dlead.recip();
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + ddeg] * &inv;
            if c.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(ddeg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the numerators after clearing denominators, i.e. the integer content.
    pub fn numerator_gcd(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    /// Content of the polynomial as a rational: `self / content` has coprime
    /// integer coefficients with a positive leading coefficient.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let l = self.denominator_lcm();
        let cleared = self.scale(&Rational::from_integer(l.clone()));
        let g = cleared.numerator_gcd();
        let c = Rational::new(g, l);
        if self.leading().is_some_and(Signed::is_negative) {
            -c
        } else {
            c
        }
    }

    pub fn primitive(&self) -> Self {
        let c = self.content();
        self.scale(&c.recip())
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    /// Renders in descending powers of `var`, e.g. `3 s^2 - 24 s + 60`.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let first = out.is_empty();
            let magnitude = c.abs();
            if c.is_negative() {
                out.push_str(if first { "-" } else { " - " });
            } else if !first {
                out.push_str(" + ");
            }
            let unit = magnitude.is_one();
            if k == 0 || !unit {
                let _ = write!(out, "{magnitude}");
            }
            if k > 0 {
                if !unit {
                    out.push(' ');
                }
                out.push_str(var);
                if k > 1 {
                    let _ = write!(out, "^{k}");
                }
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("s"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `p(c·s)`: the coefficient of `s^k` is multiplied by `c^k`.
pub fn poly_scale_substitute(p: &Polynomial, c: &Rational) -> Polynomial {
    let mut power = Rational::one();
    let mut out = Vec::with_capacity(p.coeffs.len());
    for a in &p.coeffs {
        out.push(a * &power);
        power *= c;
    }
    Polynomial::new(out)
}

/// Monic greatest common divisor over the rationals.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothZero);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        // Keeping the remainders primitive stops coefficient blow-up.
        let r = a.rem(&b)?.primitive();
        a = b;
        b = r;
    }
    Ok(a.monic())
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let z = p(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn scale_substitute_examples() {
        let b3 = p(&[15, 15, 6, 1]);
        assert_eq!(poly_scale_substitute(&b3, &rat(2, 1)), p(&[15, 30, 24, 8]));
        assert_eq!(poly_scale_substitute(&b3, &rat(1, 1)), b3);
        assert_eq!(
            poly_scale_substitute(&p(&[20, 8, 1]), &rat(-1, 1)),
            p(&[20, -8, 1])
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            p(&[-1, 1])
        );
        assert_eq!(poly_gcd(&p(&[3, 2, 7]), &p(&[1])).unwrap(), p(&[1]));
        assert_eq!(
            poly_gcd(&p(&[0, 2]), &Polynomial::zero()).unwrap(),
            p(&[0, 1])
        );
        assert_eq!(
            poly_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn gcd_removes_common_content_of_delay_product() {
        // |N|^2 |D|^2 for the (3,2) approximant has integer content 9.
        let n2 = p(&[3600, 216, 9]);
        let d2 = p(&[3600, 216, 9, 1]);
        let prod = &n2 * &d2;
        assert_eq!(prod.numerator_gcd(), BigInt::from(9));
        let reduced = prod.scale(&rat(1, 9));
        assert_eq!(reduced, p(&[1_440_000, 172_800, 12_384, 832, 33, 1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 2, 7]);
        let b = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(a.div_rem(&Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[60, -24, 3]).to_string(), "3 s^2 - 24 s + 60");
        assert_eq!(p(&[60, 36, 9, 1]).to_string(), "s^3 + 9 s^2 + 36 s + 60");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-s");
        let half = Polynomial::new(alloc::vec![rat(1, 2), rat(-3, 4)]);
        assert_eq!(half.display_in("u"), "-3/4 u + 1/2");
    }

    #[test]
    fn content_and_primitive() {
        let a = Polynomial::new(alloc::vec![rat(-3, 2), rat(-9, 4)]);
        assert_eq!(a.content(), rat(-3, 4));
        assert_eq!(a.primitive(), p(&[2, 3]));
    }

    #[test]
    fn parity_helpers() {
        let a = p(&[1, 2, 3, 4]);
        let (e, o) = a.even_odd_parts();
        assert_eq!(e, p(&[1, 3]));
        assert_eq!(o, p(&[2, 4]));
        assert_eq!(
            &e.compose_square() + &(&p(&[0, 1]) * &o.compose_square()),
            a
        );
        assert!(p(&[1, 0, 2]).is_even());
        assert!(p(&[0, 1, 0, 2]).is_odd());
        assert_eq!(p(&[1, 1]).compose(&p(&[0, 2])), p(&[1, 2]));
    }
}
