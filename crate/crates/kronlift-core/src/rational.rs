//! Exact rational scalars.
//!
//! All coordinates, matrix entries and polynomial coefficients in this crate
//! are built from `Rational` (arbitrary-precision, always in lowest terms
//! with positive denominator) so that every decision procedure is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Shorthand for a rational from an integer pair. Panics on zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fractional part in `[0, 1)`.
pub fn fract(x: &Rational) -> Rational {
    x - x.floor()
}

/// Parses `"p/q"` or `"p"`. Used by the JSON front end.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

/// Canonical `"p/q"` form (`"p"` when the denominator is 1).
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denominator_lcm(xs: &[Rational]) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        l = num_integer::lcm(l, x.denom().clone());
    }
    l
}

pub fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-3/4", "2", "-2", "0", "10/4"] {
            let x = parse_rational(s).unwrap();
            let y = parse_rational(&format_rational(&x)).unwrap();
            assert_eq!(x, y);
        }
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn fract_is_in_unit_interval() {
        for (n, d) in [(3, 2), (-3, 2), (7, 3), (-1, 5), (4, 2)] {
            let f = fract(&rat(n, d));
            assert!(f >= rat_int(0) && f < rat_int(1), "fract({n}/{d}) = {f}");
        }
        assert_eq!(fract(&rat(3, 2)), rat(1, 2));
        assert_eq!(fract(&rat(-3, 2)), rat(1, 2));
    }
}
