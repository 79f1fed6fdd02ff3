//! Exact computation of linear systems of plane curves through prescribed
//! base points, rational parametrization of the associated curves, and an
//! approximate-parametrization pipeline for Hausdorff curves.

pub mod approx;
pub mod arith;
pub mod cli;
pub mod divisor;
pub mod error;
pub mod linsys;
pub mod numeric;
pub mod param;
pub mod poly;

pub use error::{Error, Result};
