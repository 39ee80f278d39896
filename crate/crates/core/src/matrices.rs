//! Lower-triangular collocation matrices of the Newton bases at equidistant
//! nodes, built from their closed forms.
//!
//! With `h = ℓ/n`, for `j <= i`:
//!
//! | matrix  | entry `(i, j)`                          |
//! |---------|-----------------------------------------|
//! | `L`     | `h^j i! / (i-j)!`                       |
//! | `L⁻¹`   | `(-1)^(i-j) h^(-i) / (j! (i-j)!)`       |
//! | `P_L`   | `C(i, j)`                               |
//! | `P_L⁻¹` | `(-1)^(i+j) C(i, j)`                    |
//! | `D`     | `δ_ij h^(-i) / i!`                      |
//! | `L3`    | `(3/n)^j i! / (i-j)!`                   |
//!
//! `L D = P_L`, and `L3` is `L` for an interval of length 3.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::newton::{omega_eval, omega_tilde_eval};
use crate::numerics::{binomial, factorial, int, Scalar};
use crate::{Error, Result};

/// Which closed form a matrix was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixTag {
    L,
    LInverse,
    Pascal,
    PascalInverse,
    Diagonal,
    L3,
    Generic,
}

impl MatrixTag {
    pub fn name(self) -> &'static str {
        match self {
            MatrixTag::L => "L",
            MatrixTag::LInverse => "Linv",
            MatrixTag::Pascal => "pascal",
            MatrixTag::PascalInverse => "pascal_inv",
            MatrixTag::Diagonal => "D",
            MatrixTag::L3 => "L3",
            MatrixTag::Generic => "generic",
        }
    }
}

/// Dense `(n+1) × (n+1)` lower-triangular matrix; only the lower part is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerTriangular {
    rows: Vec<Vec<Scalar>>,
    tag: MatrixTag,
}

impl LowerTriangular {
    /// `rows[i]` must hold exactly the `i + 1` entries `(i, 0..=i)`.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, tag: MatrixTag) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidDegree(0));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::LengthMismatch {
                    expected: i + 1,
                    found: row.len(),
                });
            }
        }
        Ok(Self { rows, tag })
    }

    fn from_fn(n: usize, tag: MatrixTag, mut entry: impl FnMut(usize, usize) -> Scalar) -> Self {
        let rows = (0..=n)
            .map(|i| (0..=i).map(|j| entry(i, j)).collect())
            .collect();
        Self { rows, tag }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, MatrixTag::Generic, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Largest index `n`; the matrix is `(n+1) × (n+1)`.
    pub fn n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn tag(&self) -> MatrixTag {
        self.tag
    }

    pub fn with_tag(mut self, tag: MatrixTag) -> Self {
        self.tag = tag;
        self
    }

    /// Entry `(i, j)`; zero above the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        if j > i {
            Scalar::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    /// The stored entries `(i, 0..=i)`.
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.rows[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.rows.iter().map(Vec::as_slice)
    }

    pub fn diagonal(&self) -> impl Iterator<Item = &Scalar> {
        self.rows.iter().enumerate().map(|(i, r)| &r[i])
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    /// Entrywise absolute value.
    pub fn abs(&self) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(Signed::abs).collect())
                .collect(),
            tag: MatrixTag::Generic,
        }
    }

    /// Row sums of absolute values.
    pub fn abs_row_sums(&self) -> Vec<Scalar> {
        self.rows
            .iter()
            .map(|r| r.iter().fold(Scalar::zero(), |acc, v| acc + v.abs()))
            .collect()
    }

    /// Matrix product; the product of lower-triangular matrices stays lower triangular.
    pub fn mul(&self, other: &LowerTriangular) -> Result<LowerTriangular> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(Self::from_fn(self.n(), MatrixTag::Generic, |i, j| {
            (j..=i).fold(Scalar::zero(), |acc, k| {
                acc + &self.rows[i][k] * &other.rows[k][j]
            })
        }))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), v.len()));
        }
        Ok(self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    Ok(())
}

fn check_length(length: &Scalar) -> Result<()> {
    if !length.is_positive() {
        return Err(Error::NonPositiveLength(length.to_string()));
    }
    Ok(())
}

fn validate(n: usize, length: &Scalar) -> Result<()> {
    check_degree(n)?;
    check_length(length)
}

fn falling_factorial(i: usize, j: usize) -> Scalar {
    Scalar::from_integer(factorial(i) / factorial(i - j))
}

fn powers(base: &Scalar, n: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n + 1);
    let mut p = Scalar::one();
    for _ in 0..=n {
        out.push(p.clone());
        p *= base;
    }
    out
}

fn monic_closed_form(n: usize, length: &Scalar, tag: MatrixTag) -> LowerTriangular {
    let h = powers(&(length / int(n as i64)), n);
    LowerTriangular::from_fn(n, tag, |i, j| &h[j] * falling_factorial(i, j))
}

/// Collocation matrix `L = (ω_j(x_i))` of the monic Newton basis on `n + 1`
/// equidistant nodes spanning length `ℓ`.
pub fn build_l(n: usize, length: &Scalar) -> Result<LowerTriangular> {
    validate(n, length)?;
    Ok(monic_closed_form(n, length, MatrixTag::L))
}

/// `L⁻¹` from its closed form.
pub fn build_l_inverse(n: usize, length: &Scalar) -> Result<LowerTriangular> {
    validate(n, length)?;
    let inv_h = powers(&(int(n as i64) / length), n);
    Ok(LowerTriangular::from_fn(n, MatrixTag::LInverse, |i, j| {
        let value = &inv_h[i] / Scalar::from_integer(factorial(j) * factorial(i - j));
        if (i - j) % 2 == 1 {
            -value
        } else {
            value
        }
    }))
}

/// Lower-triangular Pascal matrix `P_L = (C(i, j))`.
pub fn build_pascal(n: usize) -> Result<LowerTriangular> {
    check_degree(n)?;
    Ok(LowerTriangular::from_fn(n, MatrixTag::Pascal, |i, j| {
        Scalar::from_integer(binomial(i, j))
    }))
}

/// `P_L⁻¹ = ((-1)^(i+j) C(i, j))`.
pub fn build_pascal_inverse(n: usize) -> Result<LowerTriangular> {
    check_degree(n)?;
    Ok(LowerTriangular::from_fn(
        n,
        MatrixTag::PascalInverse,
        |i, j| {
            let value = Scalar::from_integer(binomial(i, j));
            if (i + j) % 2 == 1 {
                -value
            } else {
                value
            }
        },
    ))
}

/// `D = diag(1/ω_0(x_0), ..., 1/ω_n(x_n))`, so that `L D = P_L`.
pub fn scaling_d(n: usize, length: &Scalar) -> Result<LowerTriangular> {
    validate(n, length)?;
    let inv_h = powers(&(int(n as i64) / length), n);
    Ok(LowerTriangular::from_fn(n, MatrixTag::Diagonal, |i, j| {
        if i == j {
            &inv_h[i] / Scalar::from_integer(factorial(i))
        } else {
            Scalar::zero()
        }
    }))
}

/// Collocation matrix of the basis rescaled to length 3,
/// `L3 = L diag(1, 3/ℓ, ..., (3/ℓ)^n)`. Its entries do not depend on `ℓ`.
pub fn build_l3(n: usize, length: &Scalar) -> Result<LowerTriangular> {
    validate(n, length)?;
    Ok(monic_closed_form(n, &int(3), MatrixTag::L3))
}

/// Exact inverse by forward substitution, one column at a time.
pub fn invert_lower_triangular(m: &LowerTriangular) -> Result<LowerTriangular> {
    let dim = m.dim();
    if let Some(i) = m.diagonal().position(Zero::is_zero) {
        return Err(Error::ZeroDiagonal(i));
    }
    let mut rows: Vec<Vec<Scalar>> = (0..dim)
        .map(|i| alloc::vec![Scalar::zero(); i + 1])
        .collect();
    for col in 0..dim {
        for i in col..dim {
            let mut acc = if i == col {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            for k in col..i {
                acc -= &m.rows[i][k] * &rows[k][col];
            }
            rows[i][col] = acc / &m.rows[i][i];
        }
    }
    Ok(LowerTriangular {
        rows,
        tag: MatrixTag::Generic,
    })
}

/// `(ω_j(x_i))` evaluated from the definition on arbitrary nodes.
pub fn collocation_from_nodes(nodes: &[Scalar]) -> Result<LowerTriangular> {
    if nodes.len() < 2 {
        return Err(Error::InvalidDegree(nodes.len().saturating_sub(1)));
    }
    let rows = (0..nodes.len())
        .map(|i| (0..=i).map(|j| omega_eval(nodes, j, &nodes[i])).collect())
        .collect::<Result<_>>()?;
    LowerTriangular::from_rows(rows, MatrixTag::Generic)
}

/// `(ω_j(x_i) / ω_j(x_j))` evaluated from the definition on arbitrary nodes.
pub fn normalized_collocation_from_nodes(nodes: &[Scalar]) -> Result<LowerTriangular> {
    if nodes.len() < 2 {
        return Err(Error::InvalidDegree(nodes.len().saturating_sub(1)));
    }
    let rows = (0..nodes.len())
        .map(|i| {
            (0..=i)
                .map(|j| omega_tilde_eval(nodes, j, &nodes[i]))
                .collect()
        })
        .collect::<Result<_>>()?;
    LowerTriangular::from_rows(rows, MatrixTag::Generic)
}
