use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int<T: Into<BigInt>>(v: T) -> Rational {
    Rational::from_integer(v.into())
}

/// Parses `"p/q"` or `"p"` (optionally signed). Decimal forms such as `"2.5"`
/// are accepted and converted exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if frac_part.is_empty() && int_digits.is_empty() {
            return None;
        }
        if !frac_part.chars().all(|c| c.is_ascii_digit())
            || !int_digits.chars().all(|c| c.is_ascii_digit())
        {
            return None;
        }
        let mut all = alloc::string::String::from(int_digits);
        all.push_str(frac_part);
        if all.is_empty() {
            return None;
        }
        let mantissa: BigInt = all.parse().ok()?;
        let value = Rational::new(mantissa, pow10(frac_part.len() as u32));
        return Some(if negative { -value } else { value });
    }
    let p: BigInt = t.parse().ok()?;
    Some(Rational::from_integer(p))
}

pub fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), k as usize)
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Backward (falling) factorial `q (q-1) ... (q-k+1)`, empty product 1 at `k = 0`.
pub fn falling_factorial(q: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = q.clone();
    for _ in 0..k {
        acc *= &factor;
        factor -= Rational::one();
    }
    acc
}
