//! Scalar traits for the exact kernels.
//!
//! Everything numeric in this crate is exact: determinants, characteristic
//! polynomials and Smith normal forms are written once against these traits
//! and instantiated with machine integers (fast path, overflow-checked) or
//! [`num_bigint::BigInt`] (always succeeds).

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

/// A commutative ring with unit. Only the ring operations are required, so
/// division-free algorithms (Berkowitz, cofactor expansion) can run over
/// polynomial rings as well as over the integers.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// An integer-like Euclidean domain with overflow detection.
///
/// For `BigInt` the checked operations never fail; for `i64`/`i128` they
/// report overflow so callers can retry with arbitrary precision.
pub trait IntegerScalar:
    Ring + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Display + Send + Sync
{
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

impl<T> IntegerScalar for T where
    T: Ring + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Display + Send + Sync
{
}

/// Raised when a fixed-width instantiation of an exact kernel overflows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("integer overflow in exact arithmetic")]
pub struct Overflow;

pub(crate) fn checked_mul_sub<T: IntegerScalar>(a: &T, b: &T, c: &T) -> Result<T, Overflow> {
    // a - b * c
    let bc = b.checked_mul(c).ok_or(Overflow)?;
    a.checked_sub(&bc).ok_or(Overflow)
}

pub(crate) fn checked_lin<T: IntegerScalar>(s: &T, x: &T, t: &T, y: &T) -> Result<T, Overflow> {
    // s * x + t * y
    let sx = s.checked_mul(x).ok_or(Overflow)?;
    let ty = t.checked_mul(y).ok_or(Overflow)?;
    sx.checked_add(&ty).ok_or(Overflow)
}
