use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval::RationalInterval;
use super::poly::Polynomial;
use super::rational::{pow10, Rational};
use crate::error::{Error, Result};

/// Exact real number `a + b·√d` with `d` square-free. Rational values are
/// stored with `b = 0, d = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: Rational,
    b: Rational,
    d: BigInt,
}

/// Splits `d > 0` into `(s, r)` with `d = s²·r` and `r` square-free.
fn square_free_split(d: &BigInt) -> (BigInt, BigInt) {
    let mut rest = d.clone();
    let mut square = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= rest {
        let ff = &f * &f;
        while (&rest % &ff).is_zero() {
            rest /= &ff;
            square *= &f;
        }
        f += 1;
    }
    (square, rest)
}

impl QuadSurd {
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::BadRadicand(d.to_string()));
        }
        let (s, r) = square_free_split(&d);
        let b = b * Rational::from_integer(s);
        if r.is_one() || b.is_zero() {
            return Ok(Self::rational(
                a + if r.is_one() { b } else { Rational::zero() },
            ));
        }
        Ok(Self { a, b, d: r })
    }

    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: BigInt::one(),
        }
    }

    /// `√x` for rational `x ≥ 0`.
    pub fn sqrt_of(x: &Rational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::BadRadicand(x.to_string()));
        }
        if x.is_zero() {
            return Ok(Self::rational(Rational::zero()));
        }
        // √(p/q) = √(pq)/q
        let radicand = x.numer() * x.denom();
        Self::new(
            Rational::zero(),
            Rational::new(BigInt::one(), x.denom().clone()),
            radicand,
        )
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    fn compatible(&self, other: &Self) -> Option<BigInt> {
        if self.is_rational() {
            Some(other.d.clone())
        } else if other.is_rational() || self.d == other.d {
            Some(self.d.clone())
        } else {
            None
        }
    }

    /// Sum within the same quadratic field; `None` for different radicands.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let d = self.compatible(other)?;
        Some(Self::normalized(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let d = self.compatible(other)?;
        let dr = Rational::from_integer(d.clone());
        let a = &self.a * &other.a + &self.b * &other.b * dr;
        let b = &self.a * &other.b + &self.b * &other.a;
        Some(Self::normalized(a, b, d))
    }

    fn normalized(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            Self { a, b, d }
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(&self.a * c, &self.b * c, self.d.clone())
    }

    pub fn add_rational(&self, c: &Rational) -> Self {
        Self {
            a: &self.a + c,
            b: self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal || sa == sb {
            return if sa == Ordering::Equal { sb } else { sa };
        }
        if sa == Ordering::Equal {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
        // d is square-free and > 1 here, so a² = b²d cannot happen.
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }

    pub fn cmp_rational(&self, c: &Rational) -> Ordering {
        self.add_rational(&-c).signum()
    }

    /// Exact comparison within the same quadratic field; `None` otherwise.
    pub fn partial_cmp_surd(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).map(|diff| diff.signum())
    }

    pub fn floor(&self) -> BigInt {
        let root = {
            let v = &self.b * &self.b * Rational::from_integer(self.d.clone());
            v.floor().to_integer().sqrt()
        };
        let guess = if self.b.is_negative() {
            (&self.a - Rational::from_integer(root))
                .floor()
                .to_integer()
                - BigInt::one()
        } else {
            (&self.a + Rational::from_integer(root))
                .floor()
                .to_integer()
        };
        let mut n = guess;
        while self.cmp_rational(&Rational::from_integer(n.clone())) == Ordering::Less {
            n -= 1;
        }
        while self.cmp_rational(&Rational::from_integer(&n + 1)) != Ordering::Less {
            n += 1;
        }
        n
    }

    /// Enclosure of width at most `10^{-digits}` (zero width when rational).
    pub fn enclosure(&self, digits: u32) -> RationalInterval {
        if self.is_rational() {
            return RationalInterval::point(self.a.clone());
        }
        let scale = pow10(digits);
        let scaled = self.scale(&Rational::from_integer(scale.clone()));
        let lo = scaled.floor();
        RationalInterval::new(
            Rational::new(lo.clone(), scale.clone()),
            Rational::new(lo + BigInt::one(), scale),
        )
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_rational() {
            return self.a.to_f64().unwrap_or(f64::NAN);
        }
        self.enclosure(20).midpoint_f64()
    }
}

/// Evaluates `p` at `x` exactly in `Q(√d)`.
pub fn eval_poly_at_surd(p: &Polynomial, x: &QuadSurd) -> QuadSurd {
    p.coeffs()
        .iter()
        .rev()
        .fold(QuadSurd::rational(Rational::zero()), |acc, c| {
            acc.checked_mul(x).expect("same field").add_rational(c)
        })
}

/// Correctly rounded decimal rendering of `x` with `precision` significant
/// digits (ties, only possible for rational values, round away from zero).
pub fn surd_to_float(x: &QuadSurd, precision: usize) -> Result<String> {
    if precision == 0 {
        return Err(Error::BadPrecision);
    }
    let k = precision as i64;
    let sign = x.signum();
    if sign == Ordering::Equal {
        return Ok(place_point("0".repeat(precision), 0, false));
    }
    let y = if sign == Ordering::Less {
        x.neg()
    } else {
        x.clone()
    };
    let ten = Rational::from_integer(BigInt::from(10));
    let pow10r = |e: i64| -> Rational {
        if e >= 0 {
            num_traits::pow(ten.clone(), e as usize)
        } else {
            num_traits::pow(ten.clone(), (-e) as usize).recip()
        }
    };
    let approx = y.to_f64();
    let mut e: i64 = if approx.is_finite() && approx > 0.0 {
        libm_floor_log10(approx)
    } else {
        0
    };
    while y.cmp_rational(&pow10r(e)) == Ordering::Less {
        e -= 1;
    }
    while y.cmp_rational(&pow10r(e + 1)) != Ordering::Less {
        e += 1;
    }
    let z = y.scale(&pow10r(k - 1 - e));
    let mut n = z.floor();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let frac = z.add_rational(&-Rational::from_integer(n.clone()));
    if frac.cmp_rational(&half) != Ordering::Less {
        n += 1;
    }
    if n == pow10(precision as u32) {
        n = pow10(precision as u32 - 1);
        e += 1;
    }
    Ok(place_point(n.to_string(), e, sign == Ordering::Less))
}

/// Rough `floor(log10(x))` without `std`; corrected exactly by the caller.
fn libm_floor_log10(x: f64) -> i64 {
    let mut e = 0i64;
    let mut v = x;
    while v >= 10.0 && e < 400 {
        v /= 10.0;
        e += 1;
    }
    while v < 1.0 && e > -400 {
        v *= 10.0;
        e -= 1;
    }
    e
}

/// `digits` are the significant digits; the first one sits at `10^e`.
fn place_point(digits: String, e: i64, negative: bool) -> String {
    let k = digits.len() as i64;
    let body = if e >= k - 1 {
        let mut s = digits;
        s.push_str(&"0".repeat((e - (k - 1)) as usize));
        s
    } else if e >= 0 {
        let (int, frac) = digits.split_at((e + 1) as usize);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Display for QuadSurd {
    /// `(5+sqrt(15))/2`, `3-2*sqrt(7)`, `1/3`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let l = self.a.denom().lcm(self.b.denom());
        let p = self.a.numer() * (&l / self.a.denom());
        let r = self.b.numer() * (&l / self.b.denom());
        let mut s = String::new();
        if !p.is_zero() {
            s.push_str(&p.to_string());
            s.push(if r.is_negative() { '-' } else { '+' });
        } else if r.is_negative() {
            s.push('-');
        }
        let ra = r.abs();
        if !ra.is_one() {
            s.push_str(&ra.to_string());
            s.push('*');
        }
        s.push_str(&format!("sqrt({})", self.d));
        if l.is_one() {
            f.write_str(&s)
        } else if p.is_zero() && r.is_positive() && ra.is_one() {
            write!(f, "{s}/{l}")
        } else {
            write!(f, "({s})/{l}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;

    fn surd(a: Rational, b: Rational, d: i64) -> QuadSurd {
        QuadSurd::new(a, b, BigInt::from(d)).unwrap()
    }

    #[test]
    fn order2_gamma_rendering() {
        let g = surd(rat(5, 2), rat(1, 2), 15);
        assert_eq!(surd_to_float(&g, 4).unwrap(), "4.436");
        assert_eq!(g.to_string(), "(5+sqrt(15))/2");
        let lower = surd(rat(5, 2), rat(-1, 2), 15);
        assert_eq!(surd_to_float(&lower, 4).unwrap(), "0.5635");
        assert_eq!(lower.to_string(), "(5-sqrt(15))/2");
    }

    #[test]
    fn rational_degenerate() {
        let three = surd(rat(3, 1), rat(0, 1), 2);
        assert!(three.is_rational());
        assert_eq!(surd_to_float(&three, 4).unwrap(), "3.000");
        assert_eq!(surd_to_float(&three, 1).unwrap(), "3");
        assert_eq!(
            surd_to_float(&QuadSurd::rational(rat(0, 1)), 3).unwrap(),
            "0.00"
        );
        assert_eq!(
            surd_to_float(&QuadSurd::rational(rat(-1, 8)), 2).unwrap(),
            "-0.13"
        );
        assert_eq!(
            surd_to_float(&QuadSurd::rational(rat(12345, 1)), 3).unwrap(),
            "12300"
        );
        assert_eq!(
            surd_to_float(&QuadSurd::rational(rat(9999, 1000)), 3).unwrap(),
            "10.0"
        );
        assert_eq!(surd_to_float(&three, 0), Err(Error::BadPrecision));
    }

    #[test]
    fn square_factors_are_extracted() {
        let x = surd(rat(0, 1), rat(1, 1), 12);
        assert_eq!(x.d(), &BigInt::from(3));
        assert_eq!(x.b(), &rat(2, 1));
        let y = surd(rat(1, 1), rat(1, 1), 9);
        assert!(y.is_rational());
        assert_eq!(y.a(), &rat(4, 1));
        assert!(QuadSurd::new(rat(1, 1), rat(1, 1), BigInt::from(-2)).is_err());
    }

    #[test]
    fn sign_and_ordering() {
        // 3 - 2√2 > 0, 1 - √2 < 0
        assert_eq!(surd(rat(3, 1), rat(-2, 1), 2).signum(), Ordering::Greater);
        assert_eq!(surd(rat(1, 1), rat(-1, 1), 2).signum(), Ordering::Less);
        assert_eq!(surd(rat(0, 1), rat(-1, 1), 2).signum(), Ordering::Less);
        let g = surd(rat(5, 2), rat(1, 2), 15);
        assert_eq!(g.cmp_rational(&rat(1, 2)), Ordering::Greater);
        assert_eq!(g.floor(), BigInt::from(4));
        assert_eq!(g.neg().floor(), BigInt::from(-5));
    }

    #[test]
    fn arithmetic_in_field() {
        let r = QuadSurd::sqrt_of(&rat(5, 3)).unwrap();
        let sq = r.checked_mul(&r).unwrap();
        assert_eq!(sq, QuadSurd::rational(rat(5, 3)));
        // γ = (5+√15)/2 is a root of 2γ² - 10γ + 5.
        let g = surd(rat(5, 2), rat(1, 2), 15);
        let q = Polynomial::from_i64(&[5, -10, 2]);
        assert_eq!(eval_poly_at_surd(&q, &g), QuadSurd::rational(rat(0, 1)));
        assert!(r.checked_add(&surd(rat(0, 1), rat(1, 1), 2)).is_none());
    }

    #[test]
    fn enclosure_contains_value() {
        let g = surd(rat(5, 2), rat(-1, 2), 15);
        let iv = g.enclosure(9);
        assert_eq!(g.cmp_rational(iv.lo()), Ordering::Greater);
        assert_eq!(g.cmp_rational(iv.hi()), Ordering::Less);
    }
}
