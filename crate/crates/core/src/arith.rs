//! Exact integer helpers.
//!
//! Every bound produced by this crate is a certificate, so all arithmetic
//! that can grow with the input goes through the checked helpers here and
//! reports [`Error::Overflow`] instead of wrapping. Comparisons against
//! irrational quantities such as `m·√n` are always done by squaring.

use crate::error::{Error, Result};

#[inline]
pub(crate) fn add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

#[inline]
pub(crate) fn sub(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

#[inline]
pub(crate) fn mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

/// `x(x-1)/2` for `x >= 2`, and `0` below that.
pub fn binom2(x: i64) -> Result<i64> {
    if x < 2 {
        return Ok(0);
    }
    // One of x, x-1 is even; halve it first so the product cannot
    // overflow unless the result itself does.
    let (a, b) = if x % 2 == 0 { (x / 2, x - 1) } else { (x, (x - 1) / 2) };
    mul(a, b, "binom2")
}

/// Largest `s` with `s² <= x`.
pub fn isqrt(x: i64) -> Result<i64> {
    if x < 0 {
        return Err(Error::invalid(format!("isqrt of negative value {x}")));
    }
    Ok(x.isqrt())
}

/// Genus `(d-1)(d-2)/2` of a smooth plane curve of degree `d`.
pub fn genus(d: i64) -> Result<i64> {
    if d <= 0 {
        return Err(Error::invalid(format!("curve degree must be positive, got {d}")));
    }
    binom2(d - 1)
}

/// `⌊a / b⌋` for `b > 0`.
pub(crate) fn div_floor(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// `⌈a / b⌉` for `b > 0`.
pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

/// True when `a / b` is an integer, for `b > 0`.
pub(crate) fn divides(b: i64, a: i64) -> bool {
    a.rem_euclid(b) == 0
}
