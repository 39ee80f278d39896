//! ∞-norm and Skeel condition numbers, brute force and closed form.

use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrices::LowerTriangular;
use crate::numerics::{exp_taylor_sum, factorial, int, pow, Scalar};
use crate::{Error, Result};

/// Which case of the `‖L⁻¹‖∞` formula applies.
///
/// The cases overlap at `ℓ = 2` and `ℓ = 2n`, where the formulas agree; those
/// boundary lengths are reported as [`Regime::Middle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `ℓ < 2`: the last row of `L⁻¹` dominates.
    Small,
    /// `2 <= ℓ <= 2n`: row `i_n = floor(2n/ℓ)` dominates.
    Middle,
    /// `ℓ > 2n`: the first row dominates.
    Large,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Small => "small",
            Regime::Middle => "middle",
            Regime::Large => "large",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinvNorm {
    pub value: Scalar,
    pub regime: Regime,
    /// Dominant row, recorded in the middle regime only.
    pub i_n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub n: usize,
    pub length: Scalar,
    pub norm_l: Scalar,
    pub norm_linv: Scalar,
    pub kappa_inf: Scalar,
    /// `Cond(L⁻¹) = ‖ |L| |L⁻¹| ‖∞`, equal to `3^n` for every length.
    pub skeel_of_inverse: Scalar,
    pub regime: Regime,
    pub i_n: Option<usize>,
}

/// `max_i sum_j |m_ij|`.
pub fn inf_norm(m: &LowerTriangular) -> Scalar {
    m.abs_row_sums()
        .into_iter()
        .max()
        .unwrap_or_else(Scalar::zero)
}

/// Skeel condition number `‖ |M⁻¹| |M| ‖∞`, with the inverse supplied by the caller.
///
/// Since all factors are nonnegative, row `i` of `|M⁻¹| |M|` sums to
/// `sum_k |M⁻¹_ik| r_k` with `r_k` the absolute row sums of `M`; the product
/// matrix is never formed.
pub fn skeel_cond(m: &LowerTriangular, m_inv: &LowerTriangular) -> Result<Scalar> {
    if m.dim() != m_inv.dim() {
        return Err(Error::DimensionMismatch(m.dim(), m_inv.dim()));
    }
    let r = m.abs_row_sums();
    Ok(m_inv
        .rows()
        .map(|row| {
            row.iter()
                .zip(&r)
                .fold(Scalar::zero(), |acc, (a, rk)| acc + a.abs() * rk)
        })
        .max()
        .unwrap_or_else(Scalar::zero))
}

fn validate(n: usize, length: &Scalar) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    if !length.is_positive() {
        return Err(Error::NonPositiveLength(length.to_string()));
    }
    Ok(())
}

/// `floor(2n/ℓ)` by exact integer division.
pub fn dominant_row(n: usize, length: &Scalar) -> BigInt {
    BigInt::from(2 * n) * length.denom() / length.numer()
}

/// `‖L‖∞ = n! (n/ℓ)^(-n) sum_{k=0}^{n} (n/ℓ)^k / k!`; the maximum is attained
/// in the last row.
pub fn norm_l_closed(n: usize, length: &Scalar) -> Result<Scalar> {
    validate(n, length)?;
    let x = int(n as i64) / length;
    Ok(Scalar::from_integer(factorial(n)) * exp_taylor_sum(&x, n) / pow(&x, n))
}

/// Evaluates one case of the `‖L⁻¹‖∞` formula at `(n, ℓ)` regardless of
/// whether `ℓ` lies in that case's range.
pub fn linv_norm_case(n: usize, length: &Scalar, regime: Regime) -> Scalar {
    let ratio = int(2 * n as i64) / length;
    match regime {
        Regime::Small => pow(&ratio, n) / Scalar::from_integer(factorial(n)),
        Regime::Middle => {
            let i = dominant_row(n, length)
                .to_usize()
                .expect("dominant row index fits in usize");
            pow(&ratio, i) / Scalar::from_integer(factorial(i))
        }
        Regime::Large => Scalar::one(),
    }
}

/// Case for `ℓ`, with the boundaries `ℓ = 2` and `ℓ = 2n` assigned to the middle.
pub fn regime_of(n: usize, length: &Scalar) -> Regime {
    if *length < int(2) {
        Regime::Small
    } else if *length <= int(2 * n as i64) {
        Regime::Middle
    } else {
        Regime::Large
    }
}

/// `‖L⁻¹‖∞` by the three-case formula.
pub fn norm_linv_closed(n: usize, length: &Scalar) -> Result<LinvNorm> {
    validate(n, length)?;
    let regime = regime_of(n, length);
    let i_n = (regime == Regime::Middle).then(|| dominant_row(n, length).to_usize().unwrap());
    Ok(LinvNorm {
        value: linv_norm_case(n, length, regime),
        regime,
        i_n,
    })
}

/// One case of the three-case formula for `κ∞(L)`, evaluated as written
/// (independently of the two norm formulas).
pub fn kappa_l_case(n: usize, length: &Scalar, regime: Regime) -> Scalar {
    let x = int(n as i64) / length;
    let sum = exp_taylor_sum(&x, n);
    let inv_x = length / int(n as i64);
    match regime {
        Regime::Small => pow(&int(2), n) * sum,
        Regime::Middle => {
            let i = dominant_row(n, length).to_usize().unwrap();
            Scalar::from_integer(factorial(n) / factorial(i))
                * pow(&int(2), i)
                * pow(&inv_x, n - i)
                * sum
        }
        Regime::Large => Scalar::from_integer(factorial(n)) * pow(&inv_x, n) * sum,
    }
}

/// `κ∞(L)` by the three-case formula.
pub fn kappa_l_by_cases(n: usize, length: &Scalar) -> Result<Scalar> {
    validate(n, length)?;
    Ok(kappa_l_case(n, length, regime_of(n, length)))
}

/// Full condition report for `L` on `n + 1` equidistant nodes over length `ℓ`.
pub fn kappa_l_closed(n: usize, length: &Scalar) -> Result<ConditionReport> {
    let norm_l = norm_l_closed(n, length)?;
    let linv = norm_linv_closed(n, length)?;
    Ok(ConditionReport {
        n,
        length: length.clone(),
        kappa_inf: &norm_l * &linv.value,
        norm_l,
        norm_linv: linv.value,
        skeel_of_inverse: skeel_pascal_closed(n)?,
        regime: linv.regime,
        i_n: linv.i_n,
    })
}

/// `Cond(P_L) = Cond(P_L⁻¹) = 3^n`.
pub fn skeel_pascal_closed(n: usize) -> Result<Scalar> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    Ok(pow(&int(3), n))
}

/// `κ∞(P_L) = 4^n`.
pub fn kappa_pascal_closed(n: usize) -> Result<Scalar> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    Ok(pow(&int(4), n))
}
