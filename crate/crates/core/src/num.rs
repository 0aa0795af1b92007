use alloc::format;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact arbitrary-precision rational.
pub type Rational = BigRational;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"1.25"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Argument(format!("not a rational number: {text:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int {
            "" | "-" | "+" => BigInt::zero(),
            _ => int.parse().map_err(|_| bad())?,
        };
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = int_part.abs() * &scale + frac_part;
        let signed = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(signed, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Best rational approximation of `value` with denominator at most
/// `max_denominator` (continued-fraction convergents and semiconvergents).
pub fn snap_rational(value: f64, max_denominator: u64) -> Rational {
    if !value.is_finite() {
        return Rational::zero();
    }
    let negative = value < 0.0;
    let x = value.abs();
    // Convergents p/q of x.
    let (mut p0, mut q0, mut p1, mut q1) = (0u128, 1u128, 1u128, 0u128);
    let mut rem = x;
    let max_q = max_denominator.max(1) as u128;
    for _ in 0..64 {
        let a = num_traits::float::FloatCore::floor(rem);
        if a > 1e18 {
            break;
        }
        let a_int = a as u128;
        let q2 = a_int * q1 + q0;
        if q2 > max_q {
            // Best semiconvergent that still fits.
            let k = (max_q - q0) / q1.max(1);
            let ps = k * p1 + p0;
            let qs = k * q1 + q0;
            if qs > 0 {
                let semi = ps as f64 / qs as f64;
                let conv = p1 as f64 / q1.max(1) as f64;
                if (semi - x).abs() < (conv - x).abs() {
                    p1 = ps;
                    q1 = qs;
                }
            }
            break;
        }
        let p2 = a_int * p1 + p0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = rem - a;
        if frac < 1e-15 {
            break;
        }
        rem = 1.0 / frac;
    }
    if q1 == 0 {
        return Rational::zero();
    }
    let q = Rational::new(BigInt::from(p1), BigInt::from(q1));
    if negative {
        -q
    } else {
        q
    }
}

pub(crate) fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), ratio(7, 1));
        assert_eq!(parse_rational("1.25").unwrap(), ratio(5, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn snaps_small_denominators() {
        assert_eq!(snap_rational(0.6000000001, 1000), ratio(3, 5));
        assert_eq!(snap_rational(1.4999999999, 1000), ratio(3, 2));
        assert_eq!(snap_rational(2.0 / 3.0, 1000), ratio(2, 3));
        assert_eq!(snap_rational(-0.25, 10), ratio(-1, 4));
        assert_eq!(snap_rational(core::f64::consts::PI, 7), ratio(22, 7));
    }
}
