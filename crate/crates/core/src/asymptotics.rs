//! Growth of `κ∞(L)` as the degree goes to infinity.
//!
//! The limit `ρ(ℓ) = lim κ∞(L)^(1/n)` is
//!
//! ```text
//!          2e / ℓ            ℓ <= 1
//! ρ(ℓ) =   2 e^(1/ℓ)         1 < ℓ <= 2
//!          ℓ e^(3/ℓ - 1)     ℓ >= 2
//! ```
//!
//! minimized at `ℓ = 3` where it equals 3 and `κ∞(L) / 3^n -> sqrt(3/2)`.
//! Finite-`n` checks never convert `κ∞(L)` itself to a double: it exceeds the
//! double range near `n = 650`, so everything goes through [`log_of`].

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::{E, LN_2};

use crate::conditioning::kappa_l_closed;
use crate::numerics::{log_of, Scalar};
use crate::{Error, Result};

/// Branch of `ρ(ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrowthRegime {
    /// `ℓ <= 1`
    Short,
    /// `1 < ℓ <= 2`
    Moderate,
    /// `ℓ > 2`
    Long,
}

impl GrowthRegime {
    pub fn name(self) -> &'static str {
        match self {
            GrowthRegime::Short => "l<=1",
            GrowthRegime::Moderate => "1<l<=2",
            GrowthRegime::Long => "l>=2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthProfile {
    pub length: f64,
    pub rate: f64,
    pub regime: GrowthRegime,
}

fn ln_factorial(n: usize) -> f64 {
    libm::lgamma(n as f64 + 1.0)
}

/// `Γ(n+1, x) = n! e^(-x) sum_{k=0}^{n} x^k / k!`, as a natural logarithm.
///
/// Terms are combined in log space from the smallest upward, so the result
/// is finite even where `Γ(n+1, x)` itself overflows.
pub fn ln_upper_incomplete_gamma_int(n_plus_1: usize, x: f64) -> Result<f64> {
    if n_plus_1 == 0 {
        return Err(Error::NonPositiveArgument(format!("{n_plus_1}")));
    }
    if !(x >= 0.0) {
        return Err(Error::NegativeArgument(format!("{x}")));
    }
    let n = n_plus_1 - 1;
    let ln_n_fact = ln_factorial(n);
    if x == 0.0 {
        return Ok(ln_n_fact);
    }
    let ln_x = libm::log(x);
    let mut logs: Vec<f64> = (0..=n)
        .map(|k| ln_n_fact - ln_factorial(k) + k as f64 * ln_x - x)
        .collect();
    let max = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    logs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let sum: f64 = logs.iter().map(|l| libm::exp(l - max)).sum();
    Ok(max + libm::log(sum))
}

/// Upper incomplete gamma function `Γ(n+1, x)` for integer first argument.
/// Returns `+∞` once the value leaves the double range (`n >= 171`).
pub fn upper_incomplete_gamma_int(n_plus_1: usize, x: f64) -> Result<f64> {
    Ok(libm::exp(ln_upper_incomplete_gamma_int(n_plus_1, x)?))
}

/// Both sides of `Γ(n+1, n/ℓ) >= Γ(n+1) - e^(-n/ℓ) (n/ℓ)^(n+1)` for `ℓ > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma8Check {
    pub lhs: f64,
    pub rhs: f64,
    /// `Γ(n+1, n/ℓ) / Γ(n+1)`, which tends to 1.
    pub ratio: f64,
    /// `ln` of the gap `Γ(n+1) - Γ(n+1, n/ℓ)` relative to `Γ(n+1)`.
    pub ln_deficit: f64,
    /// `ln` of the bound `e^(-n/ℓ) (n/ℓ)^(n+1) / n!` on that gap.
    pub ln_bound: f64,
    pub holds: bool,
}

/// Evaluates the incomplete-gamma lower bound at `(n, ℓ)`.
///
/// The comparison is made on the normalized gap
/// `P = 1 - Γ(n+1, x)/n! = e^(-x) sum_{k>n} x^k/k!` (with `x = n/ℓ`) against
/// `c = e^(-x) x^(n+1)/n!`, both in log space, so it stays meaningful when
/// the two sides agree to more digits than a double carries.
pub fn lemma8_bound_check(n: usize, length: f64) -> Result<Lemma8Check> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    if !(length > 1.0) {
        return Err(Error::LengthNotAboveOne(format!("{length}")));
    }
    let x = n as f64 / length;
    let ln_x = libm::log(x);
    // sum_{j>=0} prod_{i=1}^{j} x/(n+1+i), converging because x < n + 1.
    let mut tail = 0.0;
    let mut term = 1.0;
    let mut j = 0usize;
    while term > tail * 1e-17 {
        tail += term;
        j += 1;
        term *= x / (n + 1 + j) as f64;
    }
    let ln_first = -x + (n + 1) as f64 * ln_x - ln_factorial(n + 1);
    let ln_deficit = ln_first + libm::log(tail);
    let ln_bound = -x + (n + 1) as f64 * ln_x - ln_factorial(n);
    let deficit = libm::exp(ln_deficit);
    let ratio = 1.0 - deficit;
    let gamma = libm::exp(ln_factorial(n));
    Ok(Lemma8Check {
        lhs: gamma * ratio,
        rhs: gamma * (1.0 - libm::exp(ln_bound)),
        ratio,
        ln_deficit,
        ln_bound,
        holds: ln_deficit <= ln_bound,
    })
}

/// `ρ(ℓ) = lim κ∞(L)^(1/n)`.
pub fn growth_rate(length: f64) -> Result<GrowthProfile> {
    if !(length > 0.0) || !length.is_finite() {
        return Err(Error::NonPositiveArgument(format!("{length}")));
    }
    let (rate, regime) = if length <= 1.0 {
        (2.0 * E / length, GrowthRegime::Short)
    } else if length <= 2.0 {
        (2.0 * libm::exp(1.0 / length), GrowthRegime::Moderate)
    } else {
        (length * libm::exp(3.0 / length - 1.0), GrowthRegime::Long)
    };
    Ok(GrowthProfile {
        length,
        rate,
        regime,
    })
}

fn rate_of(length: f64) -> f64 {
    growth_rate(length).map(|p| p.rate).unwrap_or(f64::INFINITY)
}

/// Golden-section search for the minimum of a unimodal `f` on `[lo, hi]`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    while hi - lo > tol {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    (lo + hi) / 2.0
}

/// Bisection for a sign change of `f` on `[lo, hi]`.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let lo_sign = f(lo) < 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The length with the smallest growth rate and that rate: `(3, 3)`.
///
/// `d/dℓ [ℓ e^(3/ℓ - 1)] = e^(3/ℓ - 1) (1 - 3/ℓ)` vanishes only at `ℓ = 3`,
/// and the shorter branches are decreasing, so the minimum is analytic.
pub fn optimal_length() -> (f64, f64) {
    (3.0, rate_of(3.0))
}

/// Numeric cross-check of [`optimal_length`] by golden-section search on `[2, 10]`.
pub fn optimal_length_numeric() -> (f64, f64) {
    let l = golden_section_min(rate_of, 2.0, 10.0, 1e-9);
    (l, rate_of(l))
}

/// Length above 3 beyond which `ρ(ℓ)` exceeds the Pascal rate 4.
pub fn crossover_vs_pascal() -> f64 {
    bisect(|l| rate_of(l) - 4.0, 3.0, 20.0, 1e-8)
}

/// Length below which `ρ(ℓ)` exceeds 4 on the moderate branch: `1 / ln 2`.
pub fn lower_crossover() -> f64 {
    1.0 / LN_2
}

/// `κ∞(L) / 3^n` for each `n`, evaluated in log space.
pub fn kappa_ratio_series(length: &Scalar, n_values: &[usize]) -> Result<Vec<(usize, f64)>> {
    let ln3 = libm::log(3.0);
    n_values
        .iter()
        .map(|&n| {
            let kappa = kappa_l_closed(n, length)?.kappa_inf;
            Ok((n, libm::exp(log_of(&kappa)? - n as f64 * ln3)))
        })
        .collect()
}

/// `κ∞(L)^(1/n)` for each `n`, evaluated in log space.
pub fn rate_convergence_series(length: &Scalar, n_values: &[usize]) -> Result<Vec<(usize, f64)>> {
    n_values
        .iter()
        .map(|&n| {
            let kappa = kappa_l_closed(n, length)?.kappa_inf;
            Ok((n, libm::exp(log_of(&kappa)? / n as f64)))
        })
        .collect()
}
