use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses an integer, fraction (`-3/4`) or terminating decimal (`0.25`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not a rational number"));
    if text.is_empty() {
        return Err(bad());
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if text.contains('/') || frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole = BigInt::from_str(if whole.is_empty() || whole == "-" { "0" } else { whole })
            .map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac = BigInt::from_str(frac).map_err(|_| bad())?;
        let magnitude = Rational::from_integer(whole.abs()) + Rational::new(frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let value = Rational::from_str(text).map_err(|_| bad())?;
    Ok(value)
}

/// Lossy conversion used only for display and for seeding exact refinements.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Greatest common divisor of the absolute values of a slice; zero for an all-zero slice.
pub fn gcd_slice(values: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Scales a rational vector to the unique primitive integer vector on the same ray.
pub fn primitive_integer(values: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = values
        .iter()
        .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = gcd_slice(&scaled);
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|v| v / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert_eq!(parse_rational("-5").unwrap(), int(-5));
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), ratio(-3, 2));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn primitive_vectors() {
        let v = primitive_integer(&[ratio(1, 2), ratio(-3, 4), int(0)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
        let z = primitive_integer(&[int(0), int(0)]);
        assert_eq!(z, vec![BigInt::from(0), BigInt::from(0)]);
    }
}
