//! Exact arithmetic substrate: rationals, dense polynomials, reduced rational
//! functions, truncated series, quadratic surds, rational intervals and
//! interpolation.

mod interp;
mod interval;
mod poly;
mod ratfunc;
mod rational;
mod series;
mod surd;

pub use interp::interpolate;
pub use interval::{nth_root_enclosure, RationalInterval};
pub use poly::{poly_gcd, poly_scale_substitute, Polynomial};
pub use ratfunc::{EvenRationalFunction, RationalFunction, TransferFunction};
pub use rational::{
    binomial, factorial, falling_factorial, parse_rational, pow10, rat, rat_int, Rational,
};
pub use series::{exp_series, series_of_ratio, TruncatedSeries};
pub use surd::{eval_poly_at_surd, surd_to_float, QuadSurd};
