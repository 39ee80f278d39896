//! Intervals, equidistant grids and affine changes of variables.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::numerics::{int, Scalar};
use crate::{Error, Result};

/// Closed interval `[a, b]` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    a: Scalar,
    b: Scalar,
}

impl Interval {
    pub fn new(a: Scalar, b: Scalar) -> Result<Self> {
        if b <= a {
            return Err(Error::InvalidInterval {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(Self { a, b })
    }

    /// `[0, length]`.
    pub fn from_origin(length: Scalar) -> Result<Self> {
        if length <= Scalar::zero() {
            return Err(Error::NonPositiveLength(length.to_string()));
        }
        Ok(Self {
            a: Scalar::zero(),
            b: length,
        })
    }

    pub fn start(&self) -> &Scalar {
        &self.a
    }

    pub fn end(&self) -> &Scalar {
        &self.b
    }

    pub fn length(&self) -> Scalar {
        &self.b - &self.a
    }
}

/// `n + 1` equidistant nodes `x_i = a + (b - a) i / n` on an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    interval: Interval,
    nodes: Vec<Scalar>,
}

impl Grid {
    /// Builds the grid; `n = 0` is rejected.
    pub fn new(interval: Interval, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(n));
        }
        let length = interval.length();
        let denom = int(n as i64);
        let nodes = (0..=n)
            .map(|i| interval.start() + &length * int(i as i64) / &denom)
            .collect();
        Ok(Self { interval, nodes })
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    /// Polynomial degree, i.e. number of nodes minus one.
    pub fn n(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn nodes(&self) -> &[Scalar] {
        &self.nodes
    }

    pub fn length(&self) -> Scalar {
        self.interval.length()
    }

    /// Node spacing `(b - a) / n`.
    pub fn step(&self) -> Scalar {
        self.length() / int(self.n() as i64)
    }
}

/// Alias kept for callers that prefer the free-function spelling.
pub fn make_grid(interval: Interval, n: usize) -> Result<Grid> {
    Grid::new(interval, n)
}

/// Increasing affine map `x -> scale * x + shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub scale: Scalar,
    pub shift: Scalar,
}

impl AffineMap {
    pub fn identity() -> Self {
        Self {
            scale: Scalar::one(),
            shift: Scalar::zero(),
        }
    }

    pub fn apply(&self, x: &Scalar) -> Scalar {
        &self.scale * x + &self.shift
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            scale: &other.scale * &self.scale,
            shift: &other.scale * &self.shift + &other.shift,
        }
    }

    pub fn map_interval(&self, interval: &Interval) -> Interval {
        Interval {
            a: self.apply(interval.start()),
            b: self.apply(interval.end()),
        }
    }
}

/// The increasing affine map sending `source` onto `target`.
pub fn affine_map(source: &Interval, target: &Interval) -> AffineMap {
    let scale = target.length() / source.length();
    let shift = target.start() - &scale * source.start();
    AffineMap { scale, shift }
}

/// Canonical length-3 representative `[0, 3]`. Condition numbers of the
/// monic collocation matrix depend on the length only, so the position of the
/// target is irrelevant.
pub fn map_to_length3(_interval: &Interval) -> Interval {
    Interval {
        a: Scalar::zero(),
        b: int(3),
    }
}
