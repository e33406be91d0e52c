use alloc::string::ToString;
use alloc::vec::Vec;

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Unique polynomial of degree `< points.len()` through all `(x, y)` points,
/// built from Newton divided differences over the rationals.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateAbscissa(xi.to_string()));
        }
    }
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let n = table.len();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner on the Newton basis: c0 + (x-x0)(c1 + (x-x1)(c2 + ...)).
    let mut acc = Polynomial::constant(table[n - 1].clone());
    for i in (0..n - 1).rev() {
        let shift = Polynomial::new(alloc::vec![
            -xs[i].clone(),
            Rational::from_integer(1.into())
        ]);
        acc = &(&acc * &shift) + &Polynomial::constant(table[i].clone());
    }
    Ok(acc)
}
