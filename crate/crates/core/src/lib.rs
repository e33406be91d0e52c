//! Exact-arithmetic construction and analysis of delay-approximation transfer
//! functions built from generalized Bessel polynomials.
//!
//! Everything in this crate is computed over arbitrary-precision rationals:
//! polynomials, rational functions of `s` and of `u = ω²`, truncated power
//! series and quadratic surds. Floating point only appears in the sampling
//! functions of [`response`] and in the decimal rendering of surds and
//! intervals.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod budak;
pub mod error;
pub mod gbp;
pub mod pade;
pub mod response;
pub mod stability;

pub use algebra::{
    EvenRationalFunction, Polynomial, QuadSurd, Rational, RationalFunction, RationalInterval,
    TransferFunction, TruncatedSeries,
};
pub use error::{Error, Result};
