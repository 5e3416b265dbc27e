//! Rational number helpers shared across the crate.
//!
//! All probabilities, LP coefficients and geometric data are
//! [`num_rational::BigRational`] values: reduced numerator/denominator pairs
//! over arbitrary-precision integers. Comparisons are exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Shorthand for small rational constants in tests and table construction.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Sums a slice of rationals.
pub fn sum(values: &[Rational]) -> Rational {
    values.iter().fold(Rational::zero(), |acc, v| acc + v)
}

/// Dot product of two equally long coefficient rows.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// `true` iff every component of `a` is <= the matching component of `b`.
pub fn le_componentwise(a: &[Rational], b: &[Rational]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `true` iff every component of `a` is < the matching component of `b`.
pub fn lt_componentwise(a: &[Rational], b: &[Rational]) -> bool {
    a.iter().zip(b).all(|(x, y)| x < y)
}

/// L1-normalizes a nonnegative, nonzero direction vector.
pub fn normalize_l1(v: &[Rational]) -> Vec<Rational> {
    let total = sum(v);
    assert!(total.is_positive(), "direction must have positive L1 norm");
    v.iter().map(|x| x / &total).collect()
}

/// Scales a nonnegative rational vector to the smallest integer vector with
/// the same direction. Used when combining facet normals so that e.g.
/// (1/2, 1/2) and (1, 0) combine to the primitive direction (2, 1).
pub fn primitive_integer_direction(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .map(|x| x.denom().clone())
        .fold(BigInt::one(), |acc, d| num_integer::lcm(acc, d));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, i| num_integer::gcd(acc, i.abs()));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|i| i / &gcd).collect()
}

/// Renders a rational as an approximate decimal for human-facing reports.
/// The exact value is always reported alongside; this is marked approximate.
pub fn approx_f64(v: &Rational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Parses `a/b`, an integer, or a terminating decimal (converted exactly).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.trim_start().starts_with('-');
        let int: BigInt = if int_part == "-" || int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        let num: BigInt = frac_part.parse().ok()?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = Rational::new(num, den);
        let whole = Rational::from_integer(int);
        return Some(if negative { whole - frac } else { whole + frac });
    }
    let n: BigInt = text.parse().ok()?;
    Some(Rational::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_and_decimal_forms() {
        assert_eq!(parse_rational("1/3"), Some(rat(1, 3)));
        assert_eq!(parse_rational("0.5"), Some(rat(1, 2)));
        assert_eq!(parse_rational("2"), Some(rat(2, 1)));
        assert_eq!(parse_rational("-0.25"), Some(rat(-1, 4)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn primitive_direction_drops_common_denominators() {
        let v = vec![rat(1, 2), rat(1, 2)];
        let p = primitive_integer_direction(&v);
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(1)]);
        let sum = vec![rat(3, 2), rat(1, 2)];
        assert_eq!(
            primitive_integer_direction(&sum),
            vec![BigInt::from(3), BigInt::from(1)]
        );
    }
}
