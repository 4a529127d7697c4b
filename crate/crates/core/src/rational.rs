//! Exact rational helpers: literal parsing, modular reduction and rendering.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number used for every coordinate and coefficient.
pub type Rational = Ratio<i128>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num as i128, den as i128)
}

/// Representative of `value` modulo `modulus` in `[0, modulus)`.
pub fn rem_euclid(value: &Rational, modulus: &Rational) -> Rational {
    debug_assert!(modulus.is_positive());
    let q = (value / modulus).floor();
    value - q * modulus
}

/// Parses an exact rational from `p/q`, an integer, or a decimal literal
/// with optional exponent (`0.2`, `-1.5e-3`). Decimals are taken exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("bad rational literal {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|_| bad())?;
        let d: i128 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(n, d));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut numer: i128 = if all.is_empty() { 0 } else { all.parse().map_err(|_| bad())? };
    let scale = exponent - frac_part.len() as i32;
    if scale.unsigned_abs() > 36 {
        return Err(Error::Parse(format!("exponent out of range in {text:?}")));
    }
    let pow = 10i128.checked_pow(scale.unsigned_abs()).ok_or_else(bad)?;
    if negative {
        numer = -numer;
    }
    Ok(if scale >= 0 {
        Rational::from_integer(numer.checked_mul(pow).ok_or_else(bad)?)
    } else {
        Rational::new(numer, pow)
    })
}

/// Renders `p/q` (or just `p` for integers). Round-trips through
/// [`parse_rational`].
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

/// Renders `r` as a decimal rounded half away from zero to `places` digits,
/// with trailing zeros trimmed. Pure integer arithmetic, so output is
/// identical on every platform.
pub fn fmt_decimal(r: &Rational, places: u32) -> String {
    let scale = 10i128.pow(places);
    let scaled = r * Rational::from_integer(scale);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    // div_rem truncates toward zero; rem carries the sign of the value.
    let rounded = if rem.abs() * 2 >= *scaled.denom() {
        q + rem.signum()
    } else {
        q
    };
    if rounded.is_zero() {
        return "0".to_string();
    }
    let sign = if rounded < 0 { "-" } else { "" };
    let abs = rounded.abs();
    let whole = abs / scale;
    let frac = abs % scale;
    if frac == 0 {
        return format!("{sign}{whole}");
    }
    let frac = format!("{:0width$}", frac, width = places as usize);
    format!("{sign}{whole}.{}", frac.trim_end_matches('0'))
}
