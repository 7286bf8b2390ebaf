//! Overflow-checked integer helpers for the closed forms.

use crate::error::{Error, Result};

pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn pow(base: i128, exp: u32) -> Result<i128> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// `n / d`, failing unless `d` divides `n`.
pub(crate) fn exact_div(n: i128, d: i128) -> Result<i128> {
    if d == 0 || n % d != 0 {
        return Err(Error::InexactDivision {
            numerator: n,
            denominator: d,
        });
    }
    Ok(n / d)
}

pub(crate) fn ceil_div(n: i128, d: i128) -> i128 {
    debug_assert!(d > 0);
    -((-n).div_euclid(d))
}

/// `C(n, 2)` for `n ≥ 0`.
pub(crate) fn binom2(n: i128) -> Result<i128> {
    if n < 2 {
        return Ok(0);
    }
    Ok(mul(n, n - 1)? / 2)
}

pub(crate) fn to_u64(v: i128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Σ_{i=0}^{n-1} ⌊i/d⌋ for `n ≥ 0`, `d ≥ 1`.
pub(crate) fn floor_sum(n: i128, d: i128) -> Result<i128> {
    if n <= 0 {
        return Ok(0);
    }
    let (k, e) = (n / d, n % d);
    add(mul(d, binom2(k)?)?, mul(e, k)?)
}
