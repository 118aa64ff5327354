//! Scalar abstractions.
//!
//! Two families of scalars show up in this crate. Root-system combinatorics
//! and the Weyl product are written against [`WeightScalar`], which is any
//! field-like type `num-traits` knows how to build from small integers; the
//! exact instantiation is [`num_rational::BigRational`] and `f64` is kept
//! around as an approximate cross-check. The matrix models are written against
//! [`Real`], a floating point type usable as the real part of a complex
//! matrix entry.

use std::fmt::Debug;

use nalgebra::RealField;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Scalar in which the Weyl dimension product can be evaluated.
pub trait WeightScalar: Clone + Debug + Num + FromPrimitive {
    /// Build `num / den` in this scalar.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).expect("small integer") / Self::from_i64(den).expect("small integer")
    }
}

impl<T> WeightScalar for T where T: Clone + Debug + Num + FromPrimitive {}

/// Numerical thresholds used by the matrix-model checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Anti-Hermitian and unit-norm checks on freshly built models.
    pub construction: f64,
    /// Residual of `[X_i, X_j]` outside the span of the basis.
    pub closure: f64,
    /// Geometric certificates (fullness, bracket condition, invariance).
    pub certificate: f64,
    /// Null-space and rank determination.
    pub rank: f64,
}

/// Floating point scalar for the matrix models.
pub trait Real: RealField + Copy + FromPrimitive + ToPrimitive {
    fn tolerances() -> Tolerances;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn tolerances() -> Tolerances {
        Tolerances {
            construction: 1e-12,
            closure: 1e-10,
            certificate: 1e-9,
            rank: 1e-8,
        }
    }
}

impl Real for f32 {
    fn tolerances() -> Tolerances {
        Tolerances {
            construction: 1e-5,
            closure: 1e-4,
            certificate: 1e-3,
            rank: 1e-3,
        }
    }
}
