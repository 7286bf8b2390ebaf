use alloc::vec::Vec;

use super::{Family, FamilyKind};
use crate::arith;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// S = ⟨q, q+q₀, q+2q₀, q+2q₀+1⟩ with q₀ = 2^h, q = 2q₀².
///
/// Members are λ₁q + λ₂q₀ + λ₃ with 0 ≤ 2λ₃ ≤ λ₂ ≤ 2λ₁; up to the genus the
/// triple is unique and lexicographic order on triples is numeric order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Suzuki {
    q0: u64,
    q: u64,
}

impl Suzuki {
    pub fn new(q0: u64) -> Result<Self> {
        if q0 < 2 || !q0.is_power_of_two() {
            return Err(Error::invalid(alloc::format!(
                "Suzuki family needs q₀ = 2^h with h ≥ 1, got {q0}"
            )));
        }
        let q = q0
            .checked_mul(q0)
            .and_then(|v| v.checked_mul(2))
            .ok_or(Error::Overflow)?;
        // Keep q + 2q₀ + 1 and the genus representable.
        q0.checked_mul(q).ok_or(Error::Overflow)?;
        Ok(Suzuki { q0, q })
    }

    pub fn q0(&self) -> u64 {
        self.q0
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Members in [0, g] from the triples in lexicographic order.
    pub fn lex_elements(&self) -> Vec<u64> {
        let g = self.q0 * (self.q - 1);
        let mut out = Vec::new();
        for l1 in 0..self.q0 {
            for l2 in 0..=2 * l1 {
                for l3 in 0..=l2 / 2 {
                    let x = l1 * self.q + l2 * self.q0 + l3;
                    if x <= g {
                        out.push(x);
                    }
                }
            }
        }
        out
    }

    /// σ at the closed-form maximizer, computed through [`Family::fast_count`]
    /// instead of the defect formula.
    pub fn defect_via_count(&self) -> Result<HalfInt> {
        let s = self.argmax()?;
        let l = self.count(s)?;
        Ok(HalfInt::from_twice(arith::add(
            arith::sub(s as i128, arith::mul(2, l as i128)?)?,
            2,
        )?))
    }

    /// l(x) for 0 ≤ x ≤ g by counting triples row by row.
    fn count(&self, x: u64) -> Result<u64> {
        let g = self.genus()?;
        if x > g {
            return Err(Error::invalid(alloc::format!(
                "Suzuki fast count is valid on [0, g] = [0, {g}], got {x}"
            )));
        }
        let (q, q0) = (self.q as i128, self.q0 as i128);
        let x = x as i128;
        let l1 = x / q;
        let rem = x - l1 * q;
        // Row λ₁ holds Σ_{λ₂ ≤ 2λ₁} (⌊λ₂/2⌋ + 1) = (λ₁ + 1)² triples.
        let full_rows = arith::mul(arith::mul(l1, l1 + 1)?, 2 * l1 + 1)? / 6;
        let (t, u) = (rem / q0, rem % q0);
        let partial = if t > 2 * l1 {
            arith::mul(l1 + 1, l1 + 1)?
        } else {
            // λ₂ < t contributes ⌊λ₂/2⌋ + 1 each; λ₂ = t contributes min(⌊t/2⌋, u) + 1.
            t + (t / 2) * ((t - 1).max(0) / 2) + (t / 2).min(u) + 1
        };
        arith::to_u64(arith::add(full_rows, partial)?)
    }
}

impl Family for Suzuki {
    fn kind(&self) -> FamilyKind {
        FamilyKind::Suzuki
    }

    fn params(&self) -> Vec<(&'static str, u64)> {
        alloc::vec![("q0", self.q0)]
    }

    fn generators(&self) -> Result<Vec<u64>> {
        let (q, q0) = (self.q, self.q0);
        Ok(alloc::vec![q, q + q0, q + 2 * q0, q + 2 * q0 + 1])
    }

    fn genus(&self) -> Result<u64> {
        self.q0.checked_mul(self.q - 1).ok_or(Error::Overflow)
    }

    fn conductor(&self) -> Result<u64> {
        self.genus()?.checked_mul(2).ok_or(Error::Overflow)
    }

    /// (q₀ − 1)(q + q₀) = g − q/2.
    fn argmax(&self) -> Result<u64> {
        (self.q0 - 1).checked_mul(self.q + self.q0).ok_or(Error::Overflow)
    }

    /// (q₀/12)(4q − 3q₀ − 8).
    fn defect(&self) -> Result<Option<HalfInt>> {
        let (q, q0) = (self.q as i128, self.q0 as i128);
        let num = arith::mul(q0, arith::sub(arith::mul(4, q)?, arith::add(arith::mul(3, q0)?, 8)?)?)?;
        Ok(Some(HalfInt::from_twice(arith::exact_div(num, 6)?)))
    }

    fn contains(&self, x: u64) -> bool {
        if x >= 2 * self.q0 * (self.q - 1) {
            return true;
        }
        (0..=x / self.q).any(|l1| {
            let rem = x - l1 * self.q;
            let mut l3 = rem % self.q0;
            while l3 <= rem {
                let l2 = (rem - l3) / self.q0;
                if 2 * l3 <= l2 && l2 <= 2 * l1 {
                    return true;
                }
                l3 += self.q0;
            }
            false
        })
    }

    fn fast_count(&self, x: u64) -> Option<Result<u64>> {
        Some(self.count(x))
    }

    fn fast_count_limit(&self) -> Result<u64> {
        self.genus()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyResult;
    use crate::semigroup::NumericalSemigroup;

    #[test]
    fn q0_two() {
        let f = Suzuki::new(2).unwrap();
        assert_eq!(f.generators().unwrap(), [8, 10, 12, 13]);
        let r = FamilyResult::evaluate(&f, 10_000).unwrap();
        assert_eq!((r.argmax_closed_form, r.defect_closed_form), (10, Some(HalfInt::from_int(3).unwrap())));
        assert!(r.verify().unwrap().passed());
        let s = NumericalSemigroup::from_generators(&[8, 10, 12, 13]).unwrap();
        assert_eq!(f.fast_count(14).unwrap().unwrap(), s.count_up_to(14));
    }

    #[test]
    fn q0_eight() {
        let f = Suzuki::new(8).unwrap();
        assert_eq!(f.argmax().unwrap(), 952);
        assert_eq!(f.genus().unwrap(), 1016);
        assert_eq!(f.defect().unwrap(), Some(HalfInt::from_int(320).unwrap()));
        assert_eq!(f.defect_via_count().unwrap(), HalfInt::from_int(320).unwrap());
    }

    #[test]
    fn count_agrees_with_formula_beyond_desk_scale() {
        for h in 1..12 {
            let f = Suzuki::new(1 << h).unwrap();
            assert_eq!(Some(f.defect_via_count().unwrap()), f.defect().unwrap(), "q0 = 2^{h}");
        }
    }

    #[test]
    fn count_rejects_points_past_genus() {
        let f = Suzuki::new(2).unwrap();
        assert!(f.fast_count(15).unwrap().is_err());
    }

    #[test]
    fn rejects_non_powers() {
        assert!(Suzuki::new(3).is_err());
        assert!(Suzuki::new(1).is_err());
        assert!(Suzuki::new(6).is_err());
    }
}
