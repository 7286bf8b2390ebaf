use alloc::vec::Vec;

use super::{Family, FamilyKind};
use crate::arith::{self, ceil_div};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// S = ⟨m, m+1, …, m+h⟩ = {λ₁m + λ₂ : 0 ≤ λ₂ ≤ hλ₁}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    m: u64,
    h: u64,
}

impl Interval {
    pub fn new(m: u64, h: u64) -> Result<Self> {
        if m < 2 || h == 0 || h >= m {
            return Err(Error::invalid(alloc::format!(
                "interval semigroup needs m ≥ 2 and 1 ≤ h ≤ m − 1, got m = {m}, h = {h}"
            )));
        }
        Ok(Interval { m, h })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    /// λ = ⌈(m − 2)/(2h)⌉.
    pub fn lambda(&self) -> u64 {
        (self.m - 2).div_ceil(2 * self.h)
    }

    /// Number of gap blocks, ⌈(m − 1)/h⌉.
    fn gap_blocks(&self) -> u64 {
        (self.m - 1).div_ceil(self.h)
    }

    /// Membership in ⟨m, …, m+h⟩ without building the family: some λ₁ has
    /// λ₁m ≤ x ≤ λ₁(m + h).
    pub(crate) fn contains_in(m: u64, h: u64, x: u64) -> bool {
        let x = x as i128;
        ceil_div(x, (m + h) as i128) <= x / m as i128
    }

    /// Members in [0, c] listed by (λ₁, λ₂) in lexicographic order.
    pub fn lex_elements(&self) -> Vec<u64> {
        let c = self.gap_blocks() * self.m;
        let mut out = Vec::new();
        for l1 in 0..=self.gap_blocks() {
            for l2 in 0..=self.h * l1 {
                let x = l1 * self.m + l2;
                if x <= c {
                    out.push(x);
                }
            }
        }
        out
    }
}

impl Family for Interval {
    fn kind(&self) -> FamilyKind {
        FamilyKind::Interval
    }

    fn params(&self) -> Vec<(&'static str, u64)> {
        alloc::vec![("m", self.m), ("h", self.h)]
    }

    fn generators(&self) -> Result<Vec<u64>> {
        Ok((self.m..=self.m + self.h).collect())
    }

    fn genus(&self) -> Result<u64> {
        // Gap block k is [km + kh + 1, (k+1)m − 1], of length m − 1 − kh.
        let k = self.gap_blocks() as i128;
        let total = arith::sub(
            arith::mul(k, self.m as i128 - 1)?,
            arith::mul(self.h as i128, arith::binom2(k)?)?,
        )?;
        arith::to_u64(total)
    }

    fn conductor(&self) -> Result<u64> {
        self.gap_blocks().checked_mul(self.m).ok_or(Error::Overflow)
    }

    fn argmax(&self) -> Result<u64> {
        self.lambda().checked_mul(self.m).ok_or(Error::Overflow)
    }

    fn defect(&self) -> Result<Option<HalfInt>> {
        // σ(λm) = λ(m/2 − 1) − h·C(λ, 2)
        let l = self.lambda() as i128;
        let twice = arith::sub(
            arith::mul(l, self.m as i128 - 2)?,
            arith::mul(self.h as i128, arith::mul(l, l - 1)?)?,
        )?;
        Ok(Some(HalfInt::from_twice(twice)))
    }

    fn contains(&self, x: u64) -> bool {
        Self::contains_in(self.m, self.h, x)
    }
}
