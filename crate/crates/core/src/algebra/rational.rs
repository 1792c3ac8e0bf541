//! Arbitrary-precision rationals and their text forms.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Exact rational number; `num_rational` keeps it reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-3/4"` or a plain decimal such as `"0.8"` / `"1e-3"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let s = text.trim();
    let bad = || AlgebraError::Parse(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{whole}{frac}");
    let mut value = Rational::from_integer(all.parse::<BigInt>().map_err(|_| bad())?);
    let shift = exponent - frac.len() as i64;
    let ten = Rational::from_integer(BigInt::from(10));
    if shift >= 0 {
        value *= pow(&ten, shift as u32);
    } else {
        value /= pow(&ten, (-shift) as u32);
    }
    Ok(if negative { -value } else { value })
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// `base^exp` for a possibly negative exponent.
pub fn pow_signed(base: &Rational, exp: i64) -> Result<Rational, AlgebraError> {
    if exp >= 0 {
        Ok(pow(base, exp as u32))
    } else if base.is_zero() {
        Err(AlgebraError::DivisionByZero)
    } else {
        Ok(pow(&base.recip(), (-exp) as u32))
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Extremely large numerators and denominators can overflow the direct conversion.
        let n = q.numer().bits() as i64;
        let d = q.denom().bits() as i64;
        let shift = (n - d) - 60;
        let scaled = if shift > 0 {
            q / Rational::from_integer(BigInt::one() << shift as usize)
        } else {
            q * Rational::from_integer(BigInt::one() << (-shift) as usize)
        };
        scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
    })
}

/// Exact conversion of a finite double.
pub fn from_f64(v: f64) -> Rational {
    Rational::from_float(v).expect("finite float")
}

/// Rounds to the nearest multiple of `2^-bits`.
pub fn round_dyadic(q: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits as usize;
    let scaled = q * Rational::from_integer(scale.clone());
    Rational::new(scaled.round().to_integer(), scale)
}

/// Renders an exact value with 17 significant digits.
pub fn format_sig17(q: &Rational) -> String {
    format_f64_sig17(to_f64(q))
}

pub fn format_f64_sig17(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn to_biguint(q: &Rational) -> Option<BigUint> {
    if is_integer(q) && !q.is_negative() {
        q.numer().to_biguint()
    } else {
        None
    }
}

pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("-3/4").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("0.8").unwrap(), ratio(4, 5));
        assert_eq!(parse_rational("1e-3").unwrap(), ratio(1, 1000));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn dyadic_rounding() {
        let third = ratio(1, 3);
        let r = round_dyadic(&third, 10);
        assert_eq!(r, ratio(341, 1024));
    }

    #[test]
    fn huge_values_convert_to_float() {
        let big = Rational::new(BigInt::one() << 2000usize, BigInt::from(3) << 1990usize);
        let v = to_f64(&big);
        assert!((v - 1024.0 / 3.0).abs() < 1e-9);
    }
}
