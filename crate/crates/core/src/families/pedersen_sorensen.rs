use alloc::vec::Vec;

use super::{Family, FamilyKind, Interval, Suzuki};
use crate::arith;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// Parity class of the parameters, standing in for the characteristic of
/// the underlying field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Characteristic {
    /// q₀ and t both odd.
    Odd,
    /// q₀ and t both powers of two.
    Even,
}

/// S = ⟨q, q+q₀, q+tq₀, (t−1)q+tq₀+1⟩ with q = tq₀².
///
/// S is telescopic: ⟨q₀, q₀+1⟩ glued with tq₀+1 (scaled by t), then with the
/// last generator (scaled by q₀). Membership peels off one gluing at a time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PedersenSorensen {
    q0: u64,
    t: u64,
    q: u64,
    characteristic: Characteristic,
}

impl PedersenSorensen {
    pub fn new(q0: u64, t: u64) -> Result<Self> {
        if q0 < 2 || t < 2 {
            return Err(Error::invalid(alloc::format!(
                "Pedersen-Sørensen family needs q₀ ≥ 2 and t ≥ 2, got q₀ = {q0}, t = {t}"
            )));
        }
        let characteristic = if q0 % 2 == 1 && t % 2 == 1 {
            Characteristic::Odd
        } else if q0.is_power_of_two() && t.is_power_of_two() {
            Characteristic::Even
        } else {
            return Err(Error::UnsupportedParameters(alloc::format!(
                "q₀ = {q0}, t = {t}: need both odd or both powers of two"
            )));
        };
        let q = arith::to_u64(arith::mul(t as i128, arith::mul(q0 as i128, q0 as i128)?)?)?;
        let f = PedersenSorensen { q0, t, q, characteristic };
        f.conductor()?;
        f.last_generator()?;
        Ok(f)
    }

    pub fn q0(&self) -> u64 {
        self.q0
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    fn last_generator(&self) -> Result<u64> {
        let (q, q0, t) = (self.q as i128, self.q0 as i128, self.t as i128);
        arith::to_u64(arith::add(arith::mul(t - 1, q)?, t * q0 + 1)?)
    }

    /// y ∈ t·⟨q₀, q₀+1⟩ + ⟨tq₀+1⟩.
    fn in_middle(&self, y: u64) -> bool {
        let (q0, t) = (self.q0, self.t);
        let e = y % t;
        let Some(rest) = y.checked_sub(e * (t * q0 + 1)) else {
            return false;
        };
        Interval::contains_in(q0, 1, rest / t)
    }
}

impl Family for PedersenSorensen {
    fn kind(&self) -> FamilyKind {
        FamilyKind::PedersenSorensen
    }

    fn params(&self) -> Vec<(&'static str, u64)> {
        alloc::vec![("q0", self.q0), ("t", self.t)]
    }

    fn generators(&self) -> Result<Vec<u64>> {
        let (q, q0, t) = (self.q, self.q0, self.t);
        Ok(alloc::vec![q, q + q0, q + t * q0, self.last_generator()?])
    }

    /// q(q − 1)/(2q₀).
    fn genus(&self) -> Result<u64> {
        let q = self.q as i128;
        arith::to_u64(arith::exact_div(arith::mul(q, q - 1)?, 2 * self.q0 as i128)?)
    }

    fn conductor(&self) -> Result<u64> {
        self.genus()?.checked_mul(2).ok_or(Error::Overflow)
    }

    /// g when the parameters are odd, g − q/2 when they are powers of two.
    fn argmax(&self) -> Result<u64> {
        let g = self.genus()?;
        Ok(match self.characteristic {
            Characteristic::Odd => g,
            Characteristic::Even => g - self.q / 2,
        })
    }

    /// Known only for t = 2, where S is the Suzuki semigroup.
    fn defect(&self) -> Result<Option<HalfInt>> {
        if self.t == 2 {
            Suzuki::new(self.q0)?.defect()
        } else {
            Ok(None)
        }
    }

    fn contains(&self, x: u64) -> bool {
        let d = x % self.q0;
        let Ok(g4) = self.last_generator() else {
            return false;
        };
        match x.checked_sub(d * g4) {
            Some(rest) => self.in_middle(rest / self.q0),
            None => false,
        }
    }
}
