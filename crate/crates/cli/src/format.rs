//! Text renderings of exact rationals: parsing user input, exact `p/q`
//! strings, and decimal strings rounded to a number of significant digits.

use newton_cond_core::numerics::log_of;
use newton_cond_core::Scalar;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {input:?} as an exact rational: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `"p/q"`, an integer, or a plain decimal such as `"-2.75"` (read
/// exactly as `p / 10^k`). Exponent notation is rejected.
pub fn parse_rational(input: &str) -> Result<Scalar, ParseRationalError> {
    let err = |reason| ParseRationalError {
        input: input.to_string(),
        reason,
    };
    let s = input.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_int(p.trim()).ok_or_else(|| err("bad numerator"))?;
        let q = parse_int(q.trim()).ok_or_else(|| err("bad denominator"))?;
        if q.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(Scalar::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("bad fractional part"));
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.strip_prefix(['+', '-']).unwrap_or(whole);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("bad integer part"));
        }
        let mantissa: BigInt = format!("{whole_digits}{frac}")
            .parse()
            .map_err(|_| err("bad digits"))?;
        let value = Scalar::new(mantissa, num_traits::pow(BigInt::from(10), frac.len()));
        return Ok(if negative { -value } else { value });
    }
    parse_int(s)
        .map(Scalar::from_integer)
        .ok_or_else(|| err("expected p/q, an integer or a decimal"))
}

/// `"p/q"`, or `"p"` when the denominator is 1.
pub fn render_exact(s: &Scalar) -> String {
    s.to_string()
}

fn pow10(k: i64) -> Scalar {
    let p = Scalar::from_integer(num_traits::pow(BigInt::from(10), k.unsigned_abs() as usize));
    if k >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Rounds `|s|` to `digits` significant figures (half away from zero),
/// returning the digit string and the decimal exponent of its first digit.
fn significant(s: &Scalar, digits: usize) -> (String, i64) {
    let a = s.abs();
    let mut k = (log_of(&a).expect("positive") / std::f64::consts::LN_10).floor() as i64;
    while pow10(k) > a {
        k -= 1;
    }
    while pow10(k + 1) <= a {
        k += 1;
    }
    let scaled = &a * pow10(digits as i64 - 1 - k);
    let half = Scalar::new(BigInt::one(), BigInt::from(2));
    let mut m = (scaled + half).floor().to_integer();
    if m == num_traits::pow(BigInt::from(10), digits) {
        m /= 10;
        k += 1;
    }
    (m.to_string(), k)
}

/// Decimal rendering with `digits` significant figures.
///
/// Values whose integer part fits in `digits` digits (and that are not
/// tiny) are written positionally without trailing zeros (`104`, `33.5`,
/// `549.33`); everything else in scientific form keeping all digits
/// (`2.4370e6`).
pub fn render_sig(s: &Scalar, digits: usize) -> String {
    let digits = digits.max(1);
    if s.is_zero() {
        return "0".to_string();
    }
    let sign = if s.is_negative() { "-" } else { "" };
    let (m, k) = significant(s, digits);
    if (0..digits as i64).contains(&k) {
        let (int_part, frac) = m.split_at(k as usize + 1);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    } else if (-4..0).contains(&k) {
        let zeros = "0".repeat((-k - 1) as usize);
        format!("{sign}0.{zeros}{}", m.trim_end_matches('0'))
    } else {
        let (lead, rest) = m.split_at(1);
        if rest.is_empty() {
            format!("{sign}{lead}e{k}")
        } else {
            format!("{sign}{lead}.{rest}e{k}")
        }
    }
}

/// [`render_sig`] for a double, which is converted exactly first.
pub fn render_float_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    match Scalar::from_float(x) {
        Some(s) => render_sig(&s, digits),
        None => x.to_string(),
    }
}

/// `x` rounded to the nearest multiple of `2^-bits`, as an exact rational.
pub fn dyadic_round(x: f64, bits: i32) -> Scalar {
    let scaled = (x * 2f64.powi(bits)).round();
    let numer = Scalar::from_float(scaled).expect("finite");
    numer / Scalar::from_integer(BigInt::one() << bits as usize)
}

/// Parses the decimal renderings produced by [`render_sig`] (plain or
/// `mantissa e exponent`) back into an exact rational.
pub fn parse_decimal(input: &str) -> Result<Scalar, ParseRationalError> {
    match input.split_once(['e', 'E']) {
        Some((mantissa, exp)) => {
            let exp: i64 = exp.parse().map_err(|_| ParseRationalError {
                input: input.to_string(),
                reason: "bad exponent",
            })?;
            Ok(parse_rational(mantissa)? * pow10(exp))
        }
        None => parse_rational(input),
    }
}
