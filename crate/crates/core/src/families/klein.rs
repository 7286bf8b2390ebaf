use alloc::vec::Vec;

use super::{Family, FamilyKind, Interval};
use crate::arith;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::semigroup::NumericalSemigroup;

/// S = {i(m−1) + jm : i, j ∈ ℕ, j ≥ 1} ∪ {0}, i.e. (m + ⟨m−1, m⟩) ∪ {0}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Klein {
    m: u64,
}

impl Klein {
    pub fn new(m: u64) -> Result<Self> {
        if m < 3 {
            return Err(Error::invalid(alloc::format!("Klein family needs m ≥ 3, got {m}")));
        }
        Ok(Klein { m })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// T = ⟨m−1, m⟩ with S = (m + T) ∪ {0}.
    pub fn derived(&self) -> Interval {
        Interval::new(self.m - 1, 1).expect("m ≥ 3")
    }

    fn half_floor_ceil(&self) -> (u64, u64) {
        let k = self.m - 1;
        (k / 2, k.div_ceil(2))
    }
}

impl Family for Klein {
    fn kind(&self) -> FamilyKind {
        FamilyKind::Klein
    }

    fn params(&self) -> Vec<(&'static str, u64)> {
        alloc::vec![("m", self.m)]
    }

    /// m + k(m − 1) for k = 0, …, m − 1.
    fn generators(&self) -> Result<Vec<u64>> {
        (0..self.m)
            .map(|k| {
                k.checked_mul(self.m - 1)
                    .and_then(|v| v.checked_add(self.m))
                    .ok_or(Error::Overflow)
            })
            .collect()
    }

    fn genus(&self) -> Result<u64> {
        let t_genus = self.derived().genus()?;
        t_genus.checked_add(self.m - 1).ok_or(Error::Overflow)
    }

    fn conductor(&self) -> Result<u64> {
        self.derived()
            .conductor()?
            .checked_add(self.m)
            .ok_or(Error::Overflow)
    }

    fn argmax(&self) -> Result<u64> {
        let (_, ceil) = self.half_floor_ceil();
        ceil.checked_mul(self.m - 1)
            .and_then(|v| v.checked_add(1))
            .ok_or(Error::Overflow)
    }

    fn defect(&self) -> Result<Option<HalfInt>> {
        // (1/2)⌈(m−1)/2⌉(⌊(m−1)/2⌋ + 1) − 1/2
        let (floor, ceil) = self.half_floor_ceil();
        let twice = arith::sub(arith::mul(ceil as i128, floor as i128 + 1)?, 1)?;
        Ok(Some(HalfInt::from_twice(twice)))
    }

    fn contains(&self, x: u64) -> bool {
        x == 0 || (x >= self.m && self.derived().contains(x - self.m))
    }

    /// Built from the element description rather than the generator list.
    fn semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_membership(self.conductor()?, |x| self.contains(x))
    }
}
