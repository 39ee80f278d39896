//! Exact rationals, factorial/binomial tables and the two sanctioned ways of
//! leaving exact arithmetic ([`to_float`] and [`log_of`]).

use alloc::string::ToString;
use alloc::vec::Vec;
use core::f64::consts::LN_2;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use spin::RwLock;

use crate::{Error, Result};

/// Exact rational number, always stored reduced with a positive denominator.
pub type Scalar = BigRational;

/// Arbitrary-precision integer.
pub type Integer = BigInt;

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// Shorthand for an integral [`Scalar`].
pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

/// Shorthand for `p / q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// `base^exp` for a non-negative exponent.
pub fn pow(base: &Scalar, exp: usize) -> Scalar {
    Scalar::new(
        num_traits::pow(base.numer().clone(), exp),
        num_traits::pow(base.denom().clone(), exp),
    )
}

/// `k!`, memoized for the lifetime of the process.
pub fn factorial(k: usize) -> Integer {
    {
        let table = FACTORIALS.read();
        if let Some(value) = table.get(k) {
            return value.clone();
        }
    }
    let mut table = FACTORIALS.write();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= k {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[k].clone()
}

/// `C(i, j)`, zero when `j > i`.
pub fn binomial(i: usize, j: usize) -> Integer {
    if j > i {
        return BigInt::zero();
    }
    factorial(i) / (factorial(j) * factorial(i - j))
}

/// Nearest double to `s`. Values beyond the double range become signed infinity;
/// use [`to_float_flagged`] to detect that.
pub fn to_float(s: &Scalar) -> f64 {
    to_float_flagged(s).0
}

/// Nearest double to `s`, plus an overflow flag.
pub fn to_float_flagged(s: &Scalar) -> (f64, bool) {
    let numer = s.numer();
    if numer.is_zero() {
        return (0.0, false);
    }
    let negative = numer.sign() == Sign::Minus;
    let p = numer.magnitude();
    let q = s.denom().magnitude();

    // Scale so that the integer quotient lands in [2^62, 2^64); the remainder
    // becomes a sticky bit far below the 53-bit rounding position.
    let e = p.bits() as i64 - q.bits() as i64;
    let shift = 63 - e;
    let (scaled_p, scaled_q) = if shift >= 0 {
        (p << (shift as usize), q.clone())
    } else {
        (p.clone(), q << ((-shift) as usize))
    };
    let (quot, rem) = scaled_p.div_rem(&scaled_q);
    let mut mantissa = quot.to_u64().expect("quotient fits in 64 bits");
    if !rem.is_zero() {
        mantissa |= 1;
    }
    let exp = (-shift).clamp(-4000, 4000) as i32;
    let magnitude = libm::ldexp(mantissa as f64, exp);
    let value = if negative { -magnitude } else { magnitude };
    (value, value.is_infinite())
}

fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return libm::log(x.to_u64().unwrap() as f64);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap() as f64;
    libm::log(top) + shift as f64 * LN_2
}

/// Natural logarithm of a positive rational, without ever materializing it as
/// a double. Near 1 the logarithm is taken from `s - 1` to keep relative accuracy.
pub fn log_of(s: &Scalar) -> Result<f64> {
    if !s.is_positive() {
        return Err(Error::NonPositiveArgument(s.to_string()));
    }
    let approx = to_float(s);
    if (0.5..=2.0).contains(&approx) {
        return Ok(libm::log1p(to_float(&(s - Scalar::one()))));
    }
    Ok(ln_biguint(s.numer().magnitude()) - ln_biguint(s.denom().magnitude()))
}

/// Truncated exponential series `sum_{k=0}^{n} x^k / k!`, exact.
///
/// With `x = a/b` every term of `n! b^n` times the sum is an integer, so the
/// sum is accumulated over integers and reduced once at the end.
pub fn exp_taylor_sum(x: &Scalar, n: usize) -> Scalar {
    let a = x.numer();
    let b = x.denom();
    let mut term = num_traits::pow(b.clone(), n) * factorial(n);
    let mut total = term.clone();
    for k in 0..n {
        term = term * a / (b * BigInt::from(k + 1));
        total += &term;
    }
    Scalar::new(total, factorial(n) * num_traits::pow(b.clone(), n))
}

/// `floor(s)` as an integer, computed exactly.
pub fn floor(s: &Scalar) -> Integer {
    s.numer().div_floor(s.denom())
}
