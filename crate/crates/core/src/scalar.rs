//! Exact integer scalars for the projective matrix algebra.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// Arithmetic left the range of the scalar type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("integer overflow in exact arithmetic")]
pub struct Overflow;

/// A signed exact integer type: `i32`, `i64`, `i128` or `BigInt`.
///
/// All ring operations go through the checked helpers so that fixed-width
/// types fail loudly instead of wrapping.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Ord
    + std::hash::Hash
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn add_c(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_add(other).ok_or(Overflow)
    }

    fn sub_c(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_sub(other).ok_or(Overflow)
    }

    fn mul_c(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_mul(other).ok_or(Overflow)
    }

    fn neg_c(&self) -> Result<Self, Overflow> {
        Self::zero().checked_sub(self).ok_or(Overflow)
    }

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type holds i64 values")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + std::hash::Hash
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Integer square root test, used for determinant fuzzing.
pub fn is_perfect_square(v: i128) -> bool {
    if v < 0 {
        return false;
    }
    let r = (v as f64).sqrt() as i128;
    (r.saturating_sub(2)..=r + 2).any(|s| s >= 0 && s * s == v)
}
