//! Exact conditioning of Newton interpolation at equidistant nodes.
//!
//! Everything that can be exact is exact: nodes, divided differences, the
//! collocation matrices of the monic and normalized Newton bases, their
//! inverses and every condition number are [`Scalar`] rationals. Floats only
//! appear in [`asymptotics`], where growth rates and limits are evaluated,
//! and always through an explicit conversion ([`numerics::to_float`],
//! [`numerics::log_of`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod asymptotics;
pub mod conditioning;
mod error;
pub mod grid;
pub mod matrices;
pub mod newton;
pub mod numerics;

pub use error::{Error, Result};
pub use grid::{Grid, Interval};
pub use matrices::{LowerTriangular, MatrixTag};
pub use newton::{DividedDifferences, Flavor};
pub use numerics::{Integer, Scalar};
