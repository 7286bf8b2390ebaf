//! Exact half-integers.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// An element of ½ℤ, stored as twice its value.
///
/// Arithmetic never wraps: the operator impls panic on overflow and the
/// `checked_*` methods return [`Error::Overflow`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i128,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// The half-integer `twice / 2`.
    pub const fn from_twice(twice: i128) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(value: i128) -> Result<Self> {
        value
            .checked_mul(2)
            .map(HalfInt::from_twice)
            .ok_or(Error::Overflow)
    }

    pub const fn twice(self) -> i128 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn floor(self) -> i128 {
        self.twice.div_euclid(2)
    }

    pub const fn ceil(self) -> i128 {
        -((-self.twice).div_euclid(2))
    }

    pub fn checked_add(self, rhs: HalfInt) -> Result<HalfInt> {
        self.twice
            .checked_add(rhs.twice)
            .map(HalfInt::from_twice)
            .ok_or(Error::Overflow)
    }

    pub fn checked_sub(self, rhs: HalfInt) -> Result<HalfInt> {
        self.twice
            .checked_sub(rhs.twice)
            .map(HalfInt::from_twice)
            .ok_or(Error::Overflow)
    }

    /// Decimal rendering, e.g. `"-1.5"`, `"3"`.
    pub fn to_decimal_string(self) -> String {
        alloc::format!("{}", Decimal(self))
    }
}

struct Decimal(HalfInt);

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.0.twice;
        if t % 2 == 0 {
            write!(f, "{}", t / 2)
        } else {
            let sign = if t < 0 { "-" } else { "" };
            write!(f, "{}{}.5", sign, t.unsigned_abs() / 2)
        }
    }
}

/// Fraction form: `3/2`, `-1/2`, `4`.
impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        self.checked_add(rhs).expect("HalfInt overflow")
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        self.checked_sub(rhs).expect("HalfInt overflow")
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(self.twice.checked_neg().expect("HalfInt overflow"))
    }
}

impl PartialEq<i128> for HalfInt {
    fn eq(&self, other: &i128) -> bool {
        other.checked_mul(2) == Some(self.twice)
    }
}

impl PartialOrd<i128> for HalfInt {
    fn partial_cmp(&self, other: &i128) -> Option<Ordering> {
        match other.checked_mul(2) {
            Some(t) => Some(self.twice.cmp(&t)),
            None if *other > 0 => Some(Ordering::Less),
            None => Some(Ordering::Greater),
        }
    }
}
