use alloc::format;
use alloc::string::String;
use core::fmt;

use num_traits::{One, Zero};

use super::poly::{poly_gcd, Polynomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced rational function `num / den`: coprime, monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self {
                num,
                den: Polynomial::one(),
            });
        }
        let g = poly_gcd(&num, &den)?;
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let lc = den.leading().cloned().unwrap_or_else(Rational::one).recip();
        Ok(Self {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Numerator and denominator scaled by a common rational so that all
    /// coefficients are coprime integers and the denominator leads positively.
    /// This is the form printed in textbooks (e.g. `(5s²+15s+15)/(8s³+…)`).
    pub fn integer_form(&self) -> (Polynomial, Polynomial) {
        let combined = Polynomial::new(
            self.num
                .coeffs()
                .iter()
                .chain(self.den.coeffs())
                .cloned()
                .collect(),
        );
        let l = combined.denominator_lcm();
        let cleared = combined.scale(&Rational::from_integer(l.clone()));
        let g = cleared.numerator_gcd();
        let factor = Rational::new(l, g);
        (self.num.scale(&factor), self.den.scale(&factor))
    }

    pub fn display_in(&self, var: &str) -> String {
        let (n, d) = self.integer_form();
        let wrap = |p: &Polynomial| {
            let s = p.display_in(var);
            if p.term_count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{} / {}", wrap(&n), wrap(&d))
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }
}

/// Rational transfer function `H(s)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransferFunction(RationalFunction);

impl TransferFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        RationalFunction::new(num, den).map(Self)
    }

    pub fn numerator(&self) -> &Polynomial {
        self.0.numerator()
    }

    pub fn denominator(&self) -> &Polynomial {
        self.0.denominator()
    }

    pub fn as_rational_function(&self) -> &RationalFunction {
        &self.0
    }

    pub fn eval(&self, s: &Rational) -> Option<Rational> {
        self.0.eval(s)
    }

    /// `H(0)`, `None` for a pole at the origin.
    pub fn dc_value(&self) -> Option<Rational> {
        self.eval(&Rational::zero())
    }

    pub fn integer_form(&self) -> (Polynomial, Polynomial) {
        self.0.integer_form()
    }
}

impl fmt::Display for TransferFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_in("s"))
    }
}

/// Rational function of `u = ω²` (group delay, squared magnitude).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenRationalFunction(RationalFunction);

impl EvenRationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        RationalFunction::new(num, den).map(Self)
    }

    pub fn numerator(&self) -> &Polynomial {
        self.0.numerator()
    }

    pub fn denominator(&self) -> &Polynomial {
        self.0.denominator()
    }

    pub fn as_rational_function(&self) -> &RationalFunction {
        &self.0
    }

    /// Value at `u`.
    pub fn eval(&self, u: &Rational) -> Option<Rational> {
        self.0.eval(u)
    }

    /// Value at angular frequency `ω` (i.e. at `u = ω²`).
    pub fn eval_at_omega(&self, omega: &Rational) -> Option<Rational> {
        self.0.eval(&(omega * omega))
    }

    pub fn integer_form(&self) -> (Polynomial, Polynomial) {
        self.0.integer_form()
    }
}

impl fmt::Display for EvenRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_in("u"))
    }
}
