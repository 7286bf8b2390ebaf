use alloc::vec::Vec;

use super::{Family, FamilyKind};
use crate::arith;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// S = ⟨m, q⟩ with q + 1 = rm, written as {λ₁m − λ₂ : 0 ≤ rλ₂ ≤ λ₁}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HermitianQuotient {
    m: u64,
    q: u64,
    r: u64,
}

impl HermitianQuotient {
    pub fn new(m: u64, q: u64) -> Result<Self> {
        if m < 2 || q <= m {
            return Err(Error::invalid(alloc::format!(
                "Hermitian quotient needs 2 ≤ m < q, got m = {m}, q = {q}"
            )));
        }
        let q1 = q.checked_add(1).ok_or(Error::Overflow)?;
        if q1 % m != 0 {
            return Err(Error::invalid(alloc::format!("m = {m} does not divide q + 1 = {q1}")));
        }
        Ok(HermitianQuotient { m, q, r: q1 / m })
    }

    /// Every valid m for the given q, i.e. the divisors of q + 1 in [2, q).
    pub fn valid_m(q: u64) -> Vec<u64> {
        (2..q).filter(|m| (q + 1).is_multiple_of(*m)).collect()
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Members in [0, c] listed by (λ₁, −λ₂) in lexicographic order.
    pub fn lex_elements(&self) -> Vec<u64> {
        let c = (self.m - 1) * (self.q - 1);
        let mut out = Vec::new();
        for l1 in 0..=c / self.m + 1 {
            for l2 in (0..=l1 / self.r).rev() {
                if l1 * self.m >= l2 && l1 * self.m - l2 <= c {
                    out.push(l1 * self.m - l2);
                }
            }
        }
        out
    }
}

impl Family for HermitianQuotient {
    fn kind(&self) -> FamilyKind {
        FamilyKind::HermitianQuotient
    }

    fn params(&self) -> Vec<(&'static str, u64)> {
        alloc::vec![("m", self.m), ("q", self.q)]
    }

    fn generators(&self) -> Result<Vec<u64>> {
        Ok(alloc::vec![self.m, self.q])
    }

    fn genus(&self) -> Result<u64> {
        let c = self.conductor()?;
        Ok(c / 2)
    }

    fn conductor(&self) -> Result<u64> {
        (self.m - 1).checked_mul(self.q - 1).ok_or(Error::Overflow)
    }

    fn argmax(&self) -> Result<u64> {
        self.q
            .checked_mul(self.m.div_ceil(2) - 1)
            .ok_or(Error::Overflow)
    }

    fn defect(&self) -> Result<Option<HalfInt>> {
        let (m, q, r) = (self.m as i128, self.q as i128, self.r as i128);
        // Twice the value: (m−1)(q−r−1)/4 for odd m, (m−2)(q−1)/4 for even m.
        let twice = if m % 2 == 1 {
            arith::exact_div(arith::mul(m - 1, q - r - 1)?, 4)?
        } else {
            arith::exact_div(arith::mul(m - 2, q - 1)?, 4)?
        };
        Ok(Some(HalfInt::from_twice(twice)))
    }

    fn contains(&self, x: u64) -> bool {
        // The smallest λ₂ ≡ −x (mod m) is the only candidate worth checking.
        let l2 = (self.m - x % self.m) % self.m;
        let l1 = (x as u128 + l2 as u128) / self.m as u128;
        self.r as u128 * l2 as u128 <= l1
    }
}
