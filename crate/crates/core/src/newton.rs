//! Newton bases and the coefficients of the Newton interpolation formula.
//!
//! Three coefficient flavors share one representation:
//!
//! * `Monic`: divided differences `d_i f = [x_0, ..., x_i] f`, paired with the
//!   monic basis `ω_i(x) = (x - x_0) ... (x - x_{i-1})`;
//! * `Finite`: `ω_i(x_i) d_i f`, paired with the normalized basis
//!   `ω_i(x) / ω_i(x_i)`;
//! * `Rescaled3`: `(ℓ/3)^i d_i f`, paired with `(3/ℓ)^i ω_i(x)`, which is what
//!   one gets after mapping the nodes onto an interval of length 3.
//!
//! The functions here accept arbitrary distinct nodes; [`crate::Grid::nodes`]
//! supplies the equidistant ones.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::numerics::{int, pow, Scalar};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Monic,
    Finite,
    Rescaled3,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Monic => "monic",
            Flavor::Finite => "finite",
            Flavor::Rescaled3 => "rescaled3",
        }
    }
}

/// Coefficients of one form of the Newton formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividedDifferences {
    coefficients: Vec<Scalar>,
    flavor: Flavor,
    // Interval length the rescaled coefficients were built for.
    length: Option<Scalar>,
}

impl DividedDifferences {
    /// Wraps externally computed coefficients. `length` is required for
    /// [`Flavor::Rescaled3`] and ignored otherwise.
    pub fn from_parts(coefficients: Vec<Scalar>, flavor: Flavor, length: Option<Scalar>) -> Self {
        let length = if flavor == Flavor::Rescaled3 {
            length
        } else {
            None
        };
        Self {
            coefficients,
            flavor,
            length,
        }
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<Scalar> {
        self.coefficients
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn length(&self) -> Option<&Scalar> {
        self.length.as_ref()
    }

    fn expect(&self, flavor: Flavor) -> Result<()> {
        if self.flavor != flavor {
            return Err(Error::FlavorMismatch {
                expected: flavor.name(),
                found: self.flavor.name(),
            });
        }
        Ok(())
    }
}

/// `ω_i(x) = prod_{k<i} (x - x_k)`, for `0 <= i <= n + 1`.
pub fn omega_eval(nodes: &[Scalar], i: usize, x: &Scalar) -> Result<Scalar> {
    if i > nodes.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: nodes.len(),
        });
    }
    Ok(nodes[..i]
        .iter()
        .fold(Scalar::one(), |acc, xk| acc * (x - xk)))
}

/// `ω_i(x) / ω_i(x_i)`, for `0 <= i <= n`.
pub fn omega_tilde_eval(nodes: &[Scalar], i: usize, x: &Scalar) -> Result<Scalar> {
    if i >= nodes.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: nodes.len().saturating_sub(1),
        });
    }
    Ok(omega_eval(nodes, i, x)? / omega_eval(nodes, i, &nodes[i])?)
}

fn check_nodes(nodes: &[Scalar], samples: &[Scalar]) -> Result<()> {
    if samples.len() != nodes.len() {
        return Err(Error::LengthMismatch {
            expected: nodes.len(),
            found: samples.len(),
        });
    }
    let mut seen = BTreeMap::new();
    for (i, x) in nodes.iter().enumerate() {
        if let Some(j) = seen.insert(x, i) {
            return Err(Error::DuplicateNodes(j, i));
        }
    }
    Ok(())
}

/// Divided differences `d_k f = [x_0, ..., x_k] f` by the two-term recurrence
/// over the triangular table, in place.
pub fn divided_differences(nodes: &[Scalar], samples: &[Scalar]) -> Result<DividedDifferences> {
    check_nodes(nodes, samples)?;
    let mut table = samples.to_vec();
    let n = table.len();
    for order in 1..n {
        for k in (order..n).rev() {
            let diff = &table[k] - &table[k - 1];
            table[k] = diff / (&nodes[k] - &nodes[k - order]);
        }
    }
    Ok(DividedDifferences::from_parts(table, Flavor::Monic, None))
}

/// Finite differences `ω_i(x_i) d_i f`.
pub fn finite_differences(nodes: &[Scalar], samples: &[Scalar]) -> Result<DividedDifferences> {
    let monic = divided_differences(nodes, samples)?;
    let coefficients = monic
        .coefficients
        .into_iter()
        .enumerate()
        .map(|(i, d)| Ok(d * omega_eval(nodes, i, &nodes[i])?))
        .collect::<Result<_>>()?;
    Ok(DividedDifferences::from_parts(
        coefficients,
        Flavor::Finite,
        None,
    ))
}

/// Divided differences with respect to the nodes mapped onto an interval of
/// length 3: `(ℓ/3)^i d_i f`.
pub fn rescale_to_length3(dd: &DividedDifferences, length: &Scalar) -> Result<DividedDifferences> {
    dd.expect(Flavor::Monic)?;
    if *length <= Scalar::zero() {
        return Err(Error::NonPositiveLength(length.to_string()));
    }
    let factor = length / int(3);
    let mut scale = Scalar::one();
    let coefficients = dd
        .coefficients
        .iter()
        .map(|d| {
            let c = d * &scale;
            scale *= &factor;
            c
        })
        .collect();
    Ok(DividedDifferences::from_parts(
        coefficients,
        Flavor::Rescaled3,
        Some(length.clone()),
    ))
}

/// Undoes [`rescale_to_length3`].
pub fn unscale_from_length3(dd: &DividedDifferences) -> Result<DividedDifferences> {
    dd.expect(Flavor::Rescaled3)?;
    let length = dd
        .length
        .clone()
        .expect("rescaled coefficients carry a length");
    let factor = int(3) / length;
    let coefficients = dd
        .coefficients
        .iter()
        .enumerate()
        .map(|(i, d)| d * pow(&factor, i))
        .collect();
    Ok(DividedDifferences::from_parts(
        coefficients,
        Flavor::Monic,
        None,
    ))
}

/// Evaluates the Newton form matching `dd`'s flavor at `x`, by nested
/// multiplication `c_0 + r_1(x) (c_1 + r_2(x) (c_2 + ...))` where `r_i` is the
/// ratio of consecutive basis functions.
pub fn newton_eval(nodes: &[Scalar], dd: &DividedDifferences, x: &Scalar) -> Result<Scalar> {
    let coefficients = dd.coefficients();
    if coefficients.len() != nodes.len() {
        return Err(Error::LengthMismatch {
            expected: nodes.len(),
            found: coefficients.len(),
        });
    }
    let step_factor: Vec<Scalar> = match dd.flavor {
        Flavor::Monic => alloc::vec![Scalar::one(); nodes.len()],
        Flavor::Finite => {
            // ω_{i-1}(x_{i-1}) / ω_i(x_i)
            let norms: Vec<Scalar> = (0..nodes.len())
                .map(|i| omega_eval(nodes, i, &nodes[i]))
                .collect::<Result<_>>()?;
            (0..nodes.len())
                .map(|i| {
                    if i == 0 {
                        Scalar::one()
                    } else {
                        &norms[i - 1] / &norms[i]
                    }
                })
                .collect()
        }
        Flavor::Rescaled3 => {
            let expected = dd
                .length
                .clone()
                .expect("rescaled coefficients carry a length");
            let span = &nodes[nodes.len() - 1] - &nodes[0];
            if nodes.len() > 1 && span != expected {
                return Err(Error::LengthDisagreement {
                    expected: expected.to_string(),
                    found: span.to_string(),
                });
            }
            alloc::vec![int(3) / expected; nodes.len()]
        }
    };
    let n = nodes.len() - 1;
    let mut acc = coefficients[n].clone();
    for i in (1..=n).rev() {
        acc = &coefficients[i - 1] + acc * (x - &nodes[i - 1]) * &step_factor[i];
    }
    Ok(acc)
}
