//! Complex parallel submanifolds of complex projective space: canonical
//! embedding dimensions from the Weyl dimension formula, the orbit table
//! and its normal holonomy column, the rank-three exclusions, and numerical
//! certificates on matrix models of the classical orbits.
//!
//! Root-system arithmetic is generic over [`scalar::WeightScalar`] and the
//! matrix models over [`scalar::Real`]; the aliases below fix the usual
//! choices.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod embed;
pub mod orbit;
pub mod rootsys;
pub mod scalar;

/// Exact scalar for the Weyl product.
pub type Exact = num_rational::BigRational;

pub type MatrixModelF64 = orbit::MatrixModel<f64>;
pub type MatrixModelF32 = orbit::MatrixModel<f32>;
pub type DecompositionF64 = orbit::Decomposition<f64>;
