//! Budak approximants
//!
//! ```text
//! G(s) = K · B_m[2(γ−1)s, 2, 1] / B_n(2γs, 2, 1),   K = B_n(0,2,1) / B_m(0,2,1)
//! ```
//!
//! together with the closed-form squared magnitude, the γ values that equalize
//! one pair of `u^j` coefficients of that magnitude, and the γ-polynomial
//! structure of the group delay.
//!
//! γ is an exact rational whenever a transfer function is built. Irrational
//! γ (the order-2 solutions are quadratic surds) are only ever handled through
//! polynomials in γ: a quantity vanishes at a root of the irreducible quadratic
//! `q(γ)` exactly when `q` divides it.

use alloc::vec::Vec;
use alloc::{format, vec};
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    binomial, factorial, interpolate, nth_root_enclosure, poly_scale_substitute,
    EvenRationalFunction, Polynomial, QuadSurd, Rational, RationalInterval, TransferFunction,
};
use crate::error::{Error, Result};
use crate::gbp::{gbp, GbpParams};
use crate::response::{
    default_horizon, flatness, group_delay, group_delay_unreduced, FlatnessReport, Quantity,
};
use crate::stability::{routh_hurwitz, Verdict};

/// `m` is the numerator degree, `n` the denominator degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BudakParams {
    pub m: usize,
    pub n: usize,
    pub gamma: Rational,
}

impl BudakParams {
    pub fn new(m: usize, n: usize, gamma: Rational) -> Result<Self> {
        let p = Self { m, n, gamma };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if !self.gamma.is_positive() {
            return Err(Error::NonPositiveGamma(format!("{}", self.gamma)));
        }
        if self.n == 0 {
            return Err(Error::InvalidDegrees("n must be at least 1".into()));
        }
        if self.m > self.n {
            return Err(Error::NumeratorDegreeTooHigh {
                m: self.m,
                n: self.n,
            });
        }
        Ok(())
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn bessel_beta_one(n: usize) -> Polynomial {
    gbp(&GbpParams {
        n,
        alpha: int(2),
        beta: Rational::one(),
    })
    .expect("beta = 1")
}

/// Numerator and denominator of the Budak approximant before reduction.
/// Every coefficient is a polynomial in γ.
pub fn budak_unreduced(m: usize, n: usize, gamma: &Rational) -> (Polynomial, Polynomial) {
    let bm = bessel_beta_one(m);
    let bn = bessel_beta_one(n);
    let k = bn.coeff(0) / bm.coeff(0);
    let two = int(2);
    let num = poly_scale_substitute(&bm, &(&two * (gamma - Rational::one()))).scale(&k);
    let den = poly_scale_substitute(&bn, &(&two * gamma));
    (num, den)
}

/// Canonical transfer function of the Budak approximant.
pub fn budak_tf(params: &BudakParams) -> Result<TransferFunction> {
    params.validate()?;
    let (num, den) = budak_unreduced(params.m, params.n, &params.gamma);
    TransferFunction::new(num, den)
}

/// `Σ_i C(d,i) (2i)!/i! (d+i)! · [c]^{2(d−i)} u^{d−i}`, the building block of the
/// closed-form magnitude.
fn closed_sum(d: usize, c: &Rational) -> Polynomial {
    let c2 = c * c;
    let mut coeffs = vec![Rational::zero(); d + 1];
    for i in 0..=d {
        let w = binomial(d, i) * factorial(2 * i) / factorial(i) * factorial(d + i);
        coeffs[d - i] = Rational::from_integer(w) * num_traits::pow(c2.clone(), d - i);
    }
    Polynomial::new(coeffs)
}

/// Numerator and denominator sums of the closed-form `|G(jω)|²`, before the
/// prefactor and before reduction.
pub fn magnitude_closed_sums(m: usize, n: usize, gamma: &Rational) -> (Polynomial, Polynomial) {
    let two = int(2);
    let num = closed_sum(m, &(&two * (gamma - Rational::one())));
    let den = closed_sum(n, &(&two * gamma));
    (num, den)
}

/// Closed-form `|G(jω)|²` with prefactor `[(2n)!/(2m)!]² · m!/n!`, reduced.
pub fn budak_magnitude_closed(params: &BudakParams) -> Result<EvenRationalFunction> {
    params.validate()?;
    let BudakParams { m, n, gamma } = params;
    let ratio = Rational::new(factorial(2 * n), factorial(2 * m));
    let prefactor = &ratio * &ratio * Rational::new(factorial(*m), factorial(*n));
    let (num, den) = magnitude_closed_sums(*m, *n, gamma);
    EvenRationalFunction::new(num.scale(&prefactor), den)
}

fn check_index(n: usize, m: usize, j: usize) -> Result<()> {
    if m == 0 || m > n {
        return Err(Error::InvalidDegrees(format!(
            "need 1 <= m <= n, got m={m}, n={n}"
        )));
    }
    if j == 0 || j > m {
        return Err(Error::IndexOutOfRange { j, max: m });
    }
    Ok(())
}

/// The rational `A_j` with `[γ/(γ−1)]^{2j} = A_j` equalizing the `u^j`
/// coefficients of numerator and denominator of the closed-form magnitude.
pub fn coefficient_ratio(n: usize, m: usize, j: usize) -> Result<Rational> {
    check_index(n, m, j)?;
    let f = factorial;
    let sq = |x: BigInt| &x * &x;
    let num = sq(f(2 * n)) * sq(f(n - j)) * sq(f(m)) * f(2 * (m - j)) * f(2 * m - j);
    let den = sq(f(n)) * f(2 * (n - j)) * f(2 * n - j) * sq(f(2 * m)) * sq(f(m - j));
    Ok(Rational::new(num, den))
}

/// Both γ solutions of `[γ/(γ−1)]^{2j} = A_j`, following the `±` of
/// `γ = A^{1/2j} / (A^{1/2j} ± 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSolutions {
    pub j: usize,
    pub a_j: Rational,
    /// `r/(r+1)` with `r = A_j^{1/2j}`.
    pub branch_plus: RationalInterval,
    /// `r/(r−1)`.
    pub branch_minus: RationalInterval,
    /// Exact `(plus, minus)` surds, present for `j = 1`.
    pub exact: Option<(QuadSurd, QuadSurd)>,
}

impl GammaSolutions {
    pub fn branches(&self) -> [&RationalInterval; 2] {
        [&self.branch_plus, &self.branch_minus]
    }
}

fn plus_map(r: &Rational) -> Rational {
    r / (r + Rational::one())
}

fn minus_map(r: &Rational) -> Rational {
    r / (r - Rational::one())
}

pub fn gamma_candidates(n: usize, m: usize, j: usize, precision: u32) -> Result<GammaSolutions> {
    let a = coefficient_ratio(n, m, j)?;
    if a.is_one() {
        return Err(Error::NoFiniteSolution);
    }
    let tolerance = Rational::new(BigInt::one(), crate::algebra::pow10(precision));
    let one = Rational::one();
    let mut digits = precision + 2;
    let (plus, minus) = loop {
        let r = nth_root_enclosure(&a, 2 * j as u32, digits);
        // The enclosure must exclude r = 1 for the minus branch to be finite.
        if r.compare_to(&one) != Ordering::Equal {
            let plus = r.map_monotone(plus_map);
            let minus = r.map_monotone(minus_map);
            if plus.width() <= tolerance && minus.width() <= tolerance {
                break (plus, minus);
            }
        }
        digits += 4;
    };
    let exact = if j == 1 {
        let root = QuadSurd::sqrt_of(&a)?;
        let inv = (&a - &one).recip();
        let base = &a * &inv;
        Some((
            root.scale(&-inv.clone()).add_rational(&base),
            root.scale(&inv).add_rational(&base),
        ))
    } else {
        None
    };
    Ok(GammaSolutions {
        j,
        a_j: a,
        branch_plus: plus,
        branch_minus: minus,
        exact,
    })
}

/// The two γ giving an order-2 flat magnitude, and the cleared quadratic
/// `q(γ) = 2(n−m)γ² − 2(2n−1)γ + (2n−1)` they solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order2Gamma {
    /// `[(2n−1) + √((2n−1)(2m−1))] / (2(n−m))`
    pub upper: QuadSurd,
    /// `[(2n−1) − √((2n−1)(2m−1))] / (2(n−m))`
    pub lower: QuadSurd,
    pub quadratic: Polynomial,
}

pub fn gamma_order2(n: usize, m: usize) -> Result<Order2Gamma> {
    if m >= n {
        return Err(Error::NumeratorDegreeTooHigh { m, n });
    }
    if m == 0 {
        return Err(Error::InvalidDegrees("order-2 gamma needs m >= 1".into()));
    }
    let a = 2 * n - 1;
    let b = 2 * m - 1;
    let denom = int(2 * (n - m));
    let base = int(a) / &denom;
    let coef = denom.recip();
    let upper = QuadSurd::new(base.clone(), coef.clone(), BigInt::from(a * b))?;
    let lower = QuadSurd::new(base, -coef, BigInt::from(a * b))?;
    let quadratic = Polynomial::new(vec![int(a), -int(2 * a), int(2 * (n - m))]);
    Ok(Order2Gamma {
        upper,
        lower,
        quadratic,
    })
}

/// `(den u^j coefficient) − (num u^j coefficient)` of the closed-form magnitude,
/// both sides normalized to a unit constant term, as a polynomial in γ.
/// Recovered by exact interpolation over rational γ samples.
///
/// Accepts `1 ≤ j ≤ n` so that mismatches beyond the numerator degree (where
/// the numerator coefficient is zero) are available too.
pub fn magnitude_gamma_mismatch(n: usize, m: usize, j: usize) -> Result<Polynomial> {
    if m == 0 || m >= n {
        return Err(Error::InvalidDegrees(format!(
            "need 1 <= m < n, got m={m}, n={n}"
        )));
    }
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { j, max: n });
    }
    let bound = 2 * j;
    let points: Vec<(Rational, Rational)> = (1..=bound + 2)
        .map(|k| {
            let g = int(k);
            let (num, den) = magnitude_closed_sums(m, n, &g);
            let diff = den.coeff(j) / den.coeff(0) - num.coeff(j) / num.coeff(0);
            (g, diff)
        })
        .collect();
    let poly = interpolate(&points)?;
    if poly.degree().unwrap_or(0) > bound {
        return Err(Error::DegreeBoundExceeded(bound));
    }
    Ok(poly)
}

/// Does `poly` vanish at `root`, a root of the quadratic `q`? For an
/// irrational root `q` is irreducible, so this is divisibility by `q`.
pub fn vanishes_at_root(poly: &Polynomial, root: &QuadSurd, q: &Polynomial) -> Result<bool> {
    if root.is_rational() {
        Ok(poly.eval(root.a()).is_zero())
    } else {
        q.divides(poly)
    }
}

/// Divisibility facts behind the order-2 optimum: the `u¹` mismatch has `q(γ)`
/// as a factor, the `u²` mismatch does not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order2Certificate {
    pub quadratic: Polynomial,
    pub u1_mismatch: Polynomial,
    pub u2_mismatch: Polynomial,
    pub u1_divisible: bool,
    pub u2_divisible: bool,
}

impl Order2Certificate {
    pub fn holds(&self) -> bool {
        self.u1_divisible && !self.u2_divisible
    }
}

pub fn order2_certificate(n: usize, m: usize) -> Result<Order2Certificate> {
    let g = gamma_order2(n, m)?;
    let u1 = magnitude_gamma_mismatch(n, m, 1)?;
    let u2 = magnitude_gamma_mismatch(n, m, 2.min(n))?;
    Ok(Order2Certificate {
        u1_divisible: g.quadratic.divides(&u1)?,
        u2_divisible: n >= 2 && g.quadratic.divides(&u2)?,
        quadratic: g.quadratic,
        u1_mismatch: u1,
        u2_mismatch: u2,
    })
}

/// Magnitude flatness order of the Budak approximant at a surd-valued γ that
/// is a root of `q`.
pub fn magnitude_order_at_root(
    n: usize,
    m: usize,
    root: &QuadSurd,
    q: &Polynomial,
) -> Result<usize> {
    for j in 1..=n {
        let mismatch = magnitude_gamma_mismatch(n, m, j)?;
        if !vanishes_at_root(&mismatch, root, q)? {
            return Ok(j);
        }
    }
    Err(Error::FlatBeyondHorizon(n))
}

/// Outcome of the pairwise disjointness check on γ candidate sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutualExclusionReport {
    pub n: usize,
    pub m: usize,
    pub candidates: Vec<GammaSolutions>,
    /// `(j, j', disjoint)` for every pair `j < j'`.
    pub pairs: Vec<(usize, usize, bool)>,
    /// Every candidate interval lies strictly above 1/2.
    pub all_above_half: bool,
}

impl MutualExclusionReport {
    pub fn all_disjoint(&self) -> bool {
        self.pairs.iter().all(|&(_, _, d)| d)
    }
}

pub fn mutual_exclusion(n: usize, m: usize, precision: u32) -> Result<MutualExclusionReport> {
    if m == 0 || m >= n {
        return Err(Error::InvalidDegrees(format!(
            "need 1 <= m < n, got m={m}, n={n}"
        )));
    }
    let candidates = (1..=m)
        .map(|j| gamma_candidates(n, m, j, precision))
        .collect::<Result<Vec<_>>>()?;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let all_above_half = candidates
        .iter()
        .flat_map(|c| c.branches())
        .all(|iv| iv.compare_to(&half) == Ordering::Greater);
    let mut pairs = Vec::new();
    for (i, a) in candidates.iter().enumerate() {
        for b in &candidates[i + 1..] {
            let disjoint = a
                .branches()
                .iter()
                .all(|x| b.branches().iter().all(|y| x.disjoint(y)));
            pairs.push((a.j, b.j, disjoint));
        }
    }
    Ok(MutualExclusionReport {
        n,
        m,
        candidates,
        pairs,
        all_above_half,
    })
}

/// γ-polynomial coefficients of the group delay `Σ a_k u^k / Σ b_k u^k`,
/// scaled to coprime integer coefficients (shared constant `a_0 = b_0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelayCoefficientPolys {
    pub m: usize,
    pub n: usize,
    /// `numerator[k]` is `a_k(γ)`.
    pub numerator: Vec<Polynomial>,
    /// `denominator[k]` is `b_k(γ)`.
    pub denominator: Vec<Polynomial>,
    /// The shared constant term `a_0 = b_0`.
    pub scale: Rational,
}

impl DelayCoefficientPolys {
    pub fn a(&self, k: usize) -> Polynomial {
        self.numerator
            .get(k)
            .cloned()
            .unwrap_or_else(Polynomial::zero)
    }

    pub fn b(&self, k: usize) -> Polynomial {
        self.denominator
            .get(k)
            .cloned()
            .unwrap_or_else(Polynomial::zero)
    }

    /// `b_k(γ) − a_k(γ)`, the γ-dependence of the `u^k` deviation numerator.
    pub fn deviation(&self, k: usize) -> Polynomial {
        &self.b(k) - &self.a(k)
    }

    /// Group delay at a rational γ (reduced).
    pub fn at(&self, gamma: &Rational) -> Result<EvenRationalFunction> {
        let num = Polynomial::new(self.numerator.iter().map(|p| p.eval(gamma)).collect());
        let den = Polynomial::new(self.denominator.iter().map(|p| p.eval(gamma)).collect());
        EvenRationalFunction::new(num, den)
    }

    /// Delay flatness order at a root of `q`.
    pub fn order_at_root(&self, root: &QuadSurd, q: &Polynomial) -> Result<usize> {
        let len = self.numerator.len().max(self.denominator.len());
        for k in 1..len {
            if !vanishes_at_root(&self.deviation(k), root, q)? {
                return Ok(k);
            }
        }
        Err(Error::FlatBeyondHorizon(len))
    }
}

/// Degree bound in γ of every group-delay coefficient.
pub fn delay_gamma_degree_bound(m: usize, n: usize) -> usize {
    2 * (n + m)
}

/// `bound + 2` distinct integer samples starting at 2 (avoiding 0 and 1).
pub fn default_gamma_samples(m: usize, n: usize) -> Vec<Rational> {
    (0..delay_gamma_degree_bound(m, n) + 2)
        .map(|k| int(k + 2))
        .collect()
}

pub fn delay_gamma_polynomials(
    m: usize,
    n: usize,
    gamma_samples: &[Rational],
) -> Result<DelayCoefficientPolys> {
    if n == 0 {
        return Err(Error::InvalidDegrees("n must be at least 1".into()));
    }
    if m > n {
        return Err(Error::NumeratorDegreeTooHigh { m, n });
    }
    let bound = delay_gamma_degree_bound(m, n);
    if gamma_samples.len() <= bound {
        return Err(Error::InsufficientSamples {
            need: bound + 1,
            got: gamma_samples.len(),
        });
    }
    if let Some(bad) = gamma_samples.iter().find(|g| g.is_zero() || g.is_one()) {
        return Err(Error::ExcludedSample(format!("{bad}")));
    }
    let mut rows = Vec::with_capacity(gamma_samples.len());
    for g in gamma_samples {
        let (num, den) = budak_unreduced(m, n, g);
        let (tn, td) = group_delay_unreduced(&num, &den)?;
        let c = td.coeff(0).recip();
        rows.push((tn.scale(&c), td.scale(&c)));
    }
    let recover =
        |pick: &dyn Fn(&(Polynomial, Polynomial)) -> &Polynomial| -> Result<Vec<Polynomial>> {
            let len = rows
                .iter()
                .map(|r| pick(r).coeffs().len())
                .max()
                .unwrap_or(0);
            (0..len)
                .map(|k| {
                    let pts: Vec<_> = gamma_samples
                        .iter()
                        .zip(&rows)
                        .map(|(g, r)| (g.clone(), pick(r).coeff(k)))
                        .collect();
                    let p = interpolate(&pts)?;
                    if p.degree().unwrap_or(0) > bound {
                        return Err(Error::DegreeBoundExceeded(bound));
                    }
                    Ok(p)
                })
                .collect()
        };
    let mut numerator = recover(&|r| &r.0)?;
    let mut denominator = recover(&|r| &r.1)?;
    while numerator.last().is_some_and(Polynomial::is_zero) {
        numerator.pop();
    }
    while denominator.last().is_some_and(Polynomial::is_zero) {
        denominator.pop();
    }
    let all = Polynomial::new(
        numerator
            .iter()
            .chain(&denominator)
            .flat_map(|p| p.coeffs().iter().cloned())
            .collect(),
    );
    let l = all.denominator_lcm();
    let g = all
        .scale(&Rational::from_integer(l.clone()))
        .numerator_gcd();
    let factor = Rational::new(l, g);
    let numerator: Vec<Polynomial> = numerator.iter().map(|p| p.scale(&factor)).collect();
    let denominator: Vec<Polynomial> = denominator.iter().map(|p| p.scale(&factor)).collect();
    let scale = denominator[0].coeff(0);
    Ok(DelayCoefficientPolys {
        m,
        n,
        numerator,
        denominator,
        scale,
    })
}

/// Delay flatness of the Budak approximant at a rational γ.
pub fn delay_flatness_order_budak(params: &BudakParams) -> Result<FlatnessReport> {
    params.validate()?;
    if params.m == 0 {
        return Err(Error::InvalidDegrees(
            "delay order analysis needs m >= 1".into(),
        ));
    }
    if params.gamma.is_one() {
        return Err(Error::ExcludedSample("1".into()));
    }
    let f = group_delay(&budak_tf(params)?)?;
    flatness(&f, Quantity::Delay, default_horizon(&f))
}

/// Flatness orders and phase/stability character of the Budak approximant at
/// one of the order-2 γ values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order2Branch {
    pub gamma: QuadSurd,
    pub delay_order: usize,
    pub magnitude_order: usize,
    pub minimum_phase: bool,
    pub stability: Verdict,
}

/// Analysis of `G_{mn}^γ` at both order-2 γ values, carried out entirely on
/// γ-polynomials (divisibility by `q`, or exact evaluation at rational roots).
pub fn order2_design(n: usize, m: usize) -> Result<[Order2Branch; 2]> {
    let g = gamma_order2(n, m)?;
    let delay = delay_gamma_polynomials(m, n, &default_gamma_samples(m, n))?;
    // B_n(γ s·2) is a positive rescaling of B_n(s, 2, 1) whenever γ > 0.
    let den_verdict = routh_hurwitz(&bessel_beta_one(n))?.verdict;
    let analyze = |gamma: &QuadSurd| -> Result<Order2Branch> {
        let positive = gamma.signum() == Ordering::Greater;
        Ok(Order2Branch {
            gamma: gamma.clone(),
            delay_order: delay.order_at_root(gamma, &g.quadratic)?,
            magnitude_order: magnitude_order_at_root(n, m, gamma, &g.quadratic)?,
            minimum_phase: gamma.cmp_rational(&Rational::one()) != Ordering::Less,
            stability: if positive {
                den_verdict
            } else {
                Verdict::NotHurwitz
            },
        })
    };
    Ok([analyze(&g.upper)?, analyze(&g.lower)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, surd_to_float};
    use crate::response::magnitude_squared;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn params(m: usize, n: usize, g: Rational) -> BudakParams {
        BudakParams::new(m, n, g).unwrap()
    }

    #[test]
    fn printed_form_at_gamma_two() {
        let tf = budak_tf(&params(2, 3, rat(2, 1))).unwrap();
        let expected = TransferFunction::new(p(&[15, 15, 5]), p(&[15, 30, 24, 8])).unwrap();
        assert_eq!(tf, expected);
        let (num, den) = budak_unreduced(2, 3, &rat(2, 1));
        assert_eq!(num, p(&[120, 120, 40]));
        assert_eq!(den, p(&[120, 240, 192, 64]));
    }

    #[test]
    fn all_pole_degenerations() {
        let tf = budak_tf(&params(2, 3, rat(1, 1))).unwrap();
        assert_eq!(
            tf,
            TransferFunction::new(p(&[15]), p(&[15, 15, 6, 1])).unwrap()
        );
        let tf = budak_tf(&params(0, 2, rat(1, 1))).unwrap();
        assert_eq!(tf, TransferFunction::new(p(&[3]), p(&[3, 3, 1])).unwrap());
    }

    #[test]
    fn half_gamma_is_not_the_lowpass_pade() {
        use crate::pade::{pade_exp, PadeIndex};
        let tf = budak_tf(&params(2, 3, rat(1, 2))).unwrap();
        assert_ne!(tf, pade_exp(PadeIndex::new(3, 2)));
        let diag = budak_tf(&params(3, 3, rat(1, 2))).unwrap();
        assert_eq!(diag, pade_exp(PadeIndex::new(3, 3)));
    }

    #[test]
    fn invalid_params() {
        assert!(matches!(
            BudakParams::new(2, 3, rat(0, 1)),
            Err(Error::NonPositiveGamma(_))
        ));
        assert_eq!(
            BudakParams::new(4, 3, rat(1, 1)),
            Err(Error::NumeratorDegreeTooHigh { m: 4, n: 3 })
        );
    }

    #[test]
    fn closed_magnitude_examples() {
        let f = budak_magnitude_closed(&params(2, 3, rat(2, 1))).unwrap();
        let expected =
            EvenRationalFunction::new(p(&[225, 75, 25]), p(&[225, 180, 96, 64])).unwrap();
        assert_eq!(f, expected);
        let f = budak_magnitude_closed(&params(2, 3, rat(1, 1))).unwrap();
        let expected = EvenRationalFunction::new(p(&[225]), p(&[225, 45, 6, 1])).unwrap();
        assert_eq!(f, expected);
        let bp = params(1, 4, rat(5, 2));
        assert_eq!(
            budak_magnitude_closed(&bp).unwrap(),
            magnitude_squared(&budak_tf(&bp).unwrap())
        );
    }

    #[test]
    fn coefficient_ratio_values() {
        assert_eq!(coefficient_ratio(3, 2, 1).unwrap(), rat(5, 3));
        // j = 1 always gives (2n-1)/(2m-1).
        assert_eq!(coefficient_ratio(7, 3, 1).unwrap(), rat(13, 5));
        assert_eq!(
            coefficient_ratio(3, 2, 3),
            Err(Error::IndexOutOfRange { j: 3, max: 2 })
        );
        assert_eq!(
            coefficient_ratio(3, 2, 0),
            Err(Error::IndexOutOfRange { j: 0, max: 2 })
        );
    }

    #[test]
    fn candidates_for_three_two() {
        let sols = gamma_candidates(3, 2, 1, 9).unwrap();
        let (plus, minus) = sols.exact.clone().unwrap();
        assert_eq!(surd_to_float(&minus, 4).unwrap(), "4.436");
        assert_eq!(surd_to_float(&plus, 4).unwrap(), "0.5635");
        assert_eq!(plus.cmp_rational(sols.branch_plus.lo()), Ordering::Greater);
        assert_eq!(plus.cmp_rational(sols.branch_plus.hi()), Ordering::Less);
        let tol = Rational::new(BigInt::one(), crate::algebra::pow10(9));
        assert!(sols.branch_minus.width() <= tol);
        assert!(gamma_candidates(3, 2, 2, 9).unwrap().exact.is_none());
        assert_eq!(gamma_candidates(3, 3, 1, 9), Err(Error::NoFiniteSolution));
    }

    #[test]
    fn candidates_satisfy_defining_equation() {
        let sols = gamma_candidates(5, 3, 2, 12).unwrap();
        let a = &sols.a_j;
        // [γ/(1−γ)]^{2j} for γ < 1 and [γ/(γ−1)]^{2j} for γ > 1, both monotone.
        let lhs_plus = sols
            .branch_plus
            .map_monotone(|g| num_traits::pow(g / (Rational::one() - g), 4));
        let lhs_minus = sols
            .branch_minus
            .map_monotone(|g| num_traits::pow(g / (g - Rational::one()), 4));
        assert!(lhs_plus.contains(a));
        assert!(lhs_minus.contains(a));
    }

    #[test]
    fn order2_for_three_two() {
        let g = gamma_order2(3, 2).unwrap();
        assert_eq!(g.upper.to_string(), "(5+sqrt(15))/2");
        assert_eq!(g.lower.to_string(), "(5-sqrt(15))/2");
        assert_eq!(g.quadratic, p(&[5, -10, 2]));
        let exact = gamma_candidates(3, 2, 1, 9).unwrap().exact.unwrap();
        assert_eq!(g.upper, exact.1);
        assert_eq!(g.lower, exact.0);
        assert!(gamma_order2(3, 3).is_err());
        assert!(gamma_order2(3, 0).is_err());
    }

    #[test]
    fn mismatch_three_two() {
        let m1 = magnitude_gamma_mismatch(3, 2, 1).unwrap();
        assert_eq!(m1, p(&[5, -10, 2]).scale(&rat(-1, 15)));
        let m2 = magnitude_gamma_mismatch(3, 2, 2).unwrap();
        // At γ = 1 only the all-pole denominator contributes: 6/225.
        assert_eq!(m2.eval(&rat(1, 1)), rat(2, 75));
        let cert = order2_certificate(3, 2).unwrap();
        assert!(cert.holds());
    }

    #[test]
    fn mutual_exclusion_examples() {
        let r = mutual_exclusion(3, 2, 9).unwrap();
        assert_eq!(r.pairs, vec![(1, 2, true)]);
        assert!(r.all_above_half);
        let r = mutual_exclusion(5, 4, 9).unwrap();
        assert_eq!(r.pairs.len(), 6);
        assert!(r.all_disjoint());
        let r = mutual_exclusion(4, 1, 9).unwrap();
        assert!(r.pairs.is_empty() && r.all_disjoint());
    }

    #[test]
    fn delay_block_shared_constant() {
        let d = delay_gamma_polynomials(2, 3, &default_gamma_samples(2, 3)).unwrap();
        assert_eq!(d.scale, rat(2025, 1));
        assert_eq!(d.a(1), d.b(1));
        assert_eq!(d.b(5), &p(&[0, 0, 0, 0, 0, 0, 1]) * &p(&[-1, 1]).pow(4));
    }

    #[test]
    fn delay_samples_validation() {
        let few: Vec<Rational> = (2..12).map(|k| rat(k, 1)).collect();
        assert_eq!(
            delay_gamma_polynomials(2, 3, &few),
            Err(Error::InsufficientSamples { need: 11, got: 10 })
        );
        let mut with_one: Vec<Rational> = (2..13).map(|k| rat(k, 1)).collect();
        with_one[0] = rat(1, 1);
        assert!(matches!(
            delay_gamma_polynomials(2, 3, &with_one),
            Err(Error::ExcludedSample(_))
        ));
        let mut dup: Vec<Rational> = (2..13).map(|k| rat(k, 1)).collect();
        dup[1] = rat(2, 1);
        assert!(matches!(
            delay_gamma_polynomials(2, 3, &dup),
            Err(Error::DuplicateAbscissa(_))
        ));
        // Exactly bound + 1 samples is enough.
        let eleven: Vec<Rational> = (2..13).map(|k| rat(k, 1)).collect();
        assert!(delay_gamma_polynomials(2, 3, &eleven).is_ok());
    }

    #[test]
    fn delay_orders() {
        assert_eq!(
            delay_flatness_order_budak(&params(2, 3, rat(3, 1)))
                .unwrap()
                .order,
            2
        );
        assert_eq!(
            delay_flatness_order_budak(&params(2, 3, rat(2, 1)))
                .unwrap()
                .order,
            2
        );
        assert_eq!(
            delay_flatness_order_budak(&params(1, 4, rat(5, 2)))
                .unwrap()
                .order,
            1
        );
        assert!(delay_flatness_order_budak(&params(2, 3, rat(1, 1))).is_err());
        assert!(delay_flatness_order_budak(&params(0, 3, rat(2, 1))).is_err());
    }

    #[test]
    fn order2_design_three_two() {
        let [upper, lower] = order2_design(3, 2).unwrap();
        assert_eq!(
            (
                upper.delay_order,
                upper.magnitude_order,
                upper.minimum_phase
            ),
            (2, 2, true)
        );
        assert_eq!(upper.stability, Verdict::StrictHurwitz);
        assert_eq!(
            (
                lower.delay_order,
                lower.magnitude_order,
                lower.minimum_phase
            ),
            (2, 2, false)
        );
    }

    #[test]
    fn order2_design_with_rational_roots() {
        // (2n-1)(2m-1) = 9 is a perfect square for (n, m) = (5, 1): γ ∈ {3/2, 3/4}.
        let g = gamma_order2(5, 1).unwrap();
        assert!(g.upper.is_rational());
        assert_eq!(g.upper.a(), &rat(3, 2));
        let [upper, lower] = order2_design(5, 1).unwrap();
        assert_eq!(upper.magnitude_order, 2);
        assert_eq!(lower.magnitude_order, 2);
        let direct =
            crate::response::magnitude_flatness(&budak_tf(&params(1, 5, rat(3, 2))).unwrap())
                .unwrap();
        assert_eq!(direct.order, 2);
    }
}
