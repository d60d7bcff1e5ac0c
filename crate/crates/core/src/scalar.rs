//! Numeric scalar abstraction.
//!
//! Deviations and evaluation metrics are ratios of small integers, so any
//! type that can divide and compare works: `f32`, `f64`, or an exact
//! rational such as [`crate::Rational`].

use num_traits::{FromPrimitive, Num};

/// Scalar type for diagonal deviations and evaluation metrics.
pub trait Scalar: Num + FromPrimitive + PartialOrd + Clone {}

impl<T> Scalar for T where T: Num + FromPrimitive + PartialOrd + Clone {}

/// `numerator / denominator` in `S`. Requires `denominator > 0`.
pub(crate) fn ratio<S: Scalar>(numerator: usize, denominator: usize) -> S {
    assert!(denominator > 0, "ratio denominator must be positive");
    from_count::<S>(numerator) / from_count::<S>(denominator)
}

pub(crate) fn from_count<S: Scalar>(n: usize) -> S {
    S::from_usize(n).expect("count representable in scalar type")
}
