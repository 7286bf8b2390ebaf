//! The Clifford map σ(x) = x/2 − l(x) + 1, its exhaustive maximization, and
//! the Δ map.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::semigroup::NumericalSemigroup;

/// Domain over which σ is maximized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomainKind {
    /// S ∩ [0, c].
    RestrictedToS,
    /// Every integer in [0, c].
    FullInterval,
}

/// σ evaluated on a whole domain, with the maximum and every point attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordProfile {
    pub domain_kind: DomainKind,
    /// Domain points, ascending.
    pub points: Vec<u64>,
    /// `values[i]` = σ(`points[i]`).
    pub values: Vec<HalfInt>,
    pub max_value: HalfInt,
    /// Every domain point attaining `max_value`, ascending.
    pub argmax: Vec<u64>,
}

impl CliffordProfile {
    pub fn value_at(&self, x: u64) -> Option<HalfInt> {
        self.points.binary_search(&x).ok().map(|i| self.values[i])
    }

    pub fn is_argmax(&self, x: u64) -> bool {
        self.argmax.binary_search(&x).is_ok()
    }
}

fn sigma_unchecked(s: &NumericalSemigroup, x: u64) -> HalfInt {
    let l = s.count_up_to(x as i64);
    HalfInt::from_twice(x as i128 - 2 * l as i128 + 2)
}

fn check_domain(s: &NumericalSemigroup, x: u64) -> Result<()> {
    if x > s.conductor() {
        return Err(Error::invalid(alloc::format!(
            "{x} is outside [0, c] = [0, {}]",
            s.conductor()
        )));
    }
    Ok(())
}

/// σ(x) for `0 ≤ x ≤ c`; `x` need not be a member.
pub fn sigma(s: &NumericalSemigroup, x: u64) -> Result<HalfInt> {
    check_domain(s, x)?;
    Ok(sigma_unchecked(s, x))
}

/// Δ(a) = a + 2·|S ∩ [a, c − 1]|.
///
/// The counted set is cut at c − 1 so that 2σ(a) = Δ(a) − 2·|S ∩ [0, c − 1]|
/// holds for every member `a`.
pub fn delta(s: &NumericalSemigroup, a: u64) -> Result<u64> {
    check_domain(s, a)?;
    let c = s.conductor() as i64;
    Ok(a + 2 * s.count_between(a as i64, c - 1))
}

/// Evaluates σ on every point of the requested domain.
pub fn profile(s: &NumericalSemigroup, kind: DomainKind) -> CliffordProfile {
    let c = s.conductor();
    let points: Vec<u64> = match kind {
        DomainKind::RestrictedToS => s.members().collect(),
        DomainKind::FullInterval => (0..=c).collect(),
    };
    let values: Vec<HalfInt> = points.iter().map(|&x| sigma_unchecked(s, x)).collect();
    let max_value = values.iter().copied().max().unwrap_or(HalfInt::ZERO);
    let argmax: Vec<u64> = points
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v == max_value)
        .map(|(p, _)| *p)
        .collect();

    if kind == DomainKind::RestrictedToS {
        // Some maximizer lies in [c/2, c]; for symmetric S also in [g − ⌈m/2⌉, g].
        debug_assert!(argmax.iter().any(|&a| 2 * a >= c));
        debug_assert!(!s.is_symmetric() || {
            let (g, m) = (s.genus(), s.multiplicity());
            let lo = g.saturating_sub(m.div_ceil(2));
            argmax.iter().any(|&a| lo <= a && a <= g)
        });
    }

    CliffordProfile {
        domain_kind: kind,
        points,
        values,
        max_value,
        argmax,
    }
}

/// Maximum of σ over S ∩ [0, c].
pub fn clifford_defect(s: &NumericalSemigroup) -> HalfInt {
    profile(s, DomainKind::RestrictedToS).max_value
}

/// Maximum of σ over all of [0, c], i.e. s(Q) = max{a/2 − l(a) + 1 : a ∈ ℕ}.
pub fn duursma_defect(s: &NumericalSemigroup) -> HalfInt {
    profile(s, DomainKind::FullInterval).max_value
}

/// Compares σ(s1) with σ(s2) for members `s1 ≤ s2` by counting the members in
/// `(s1, s2]` against `(s2 − s1)/2`.
pub fn sigma_compare(s: &NumericalSemigroup, s1: u64, s2: u64) -> Result<Ordering> {
    check_domain(s, s2)?;
    if s1 > s2 || !s.contains(s1 as i64) || !s.contains(s2 as i64) {
        return Err(Error::invalid(alloc::format!(
            "need members s1 ≤ s2 in [0, c], got {s1}, {s2}"
        )));
    }
    let between = s.count_between(s1 as i64 + 1, s2 as i64);
    Ok((2 * between).cmp(&(s2 - s1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn sigma_values() {
        let s = sg(&[3, 5]);
        assert_eq!(sigma(&s, 3).unwrap(), HalfInt::HALF);
        assert_eq!(sigma(&s, 0).unwrap(), HalfInt::ZERO);
        assert_eq!(sigma(&s, 8).unwrap(), HalfInt::ZERO);
        assert!(sigma(&s, 9).is_err());
        assert_eq!(sigma(&sg(&[4, 6, 9]), 0).unwrap(), HalfInt::ZERO);
    }

    #[test]
    fn delta_values() {
        let s = sg(&[3, 5]);
        assert_eq!(delta(&s, 3).unwrap(), 9);
        assert_eq!(delta(&s, 0).unwrap(), 8);
        assert_eq!(delta(&NumericalSemigroup::naturals(), 0).unwrap(), 0);
        assert!(delta(&s, 9).is_err());
        let offset = 2 * s.count_up_to(7) as i128;
        for a in s.members() {
            let d = delta(&s, a).unwrap() as i128;
            assert_eq!(sigma(&s, a).unwrap().twice(), d - offset);
        }
    }

    #[test]
    fn profiles_of_three_five() {
        let s = sg(&[3, 5]);
        let r = profile(&s, DomainKind::RestrictedToS);
        assert_eq!(r.max_value, HalfInt::HALF);
        assert_eq!(r.argmax, [3, 5]);
        assert_eq!(r.points, [0, 3, 5, 6, 8]);
        let f = profile(&s, DomainKind::FullInterval);
        assert_eq!(f.max_value, HalfInt::ONE);
        assert_eq!(f.argmax, [2, 4]);
        assert_eq!(f.value_at(7), Some(HalfInt::from_twice(1)));
        assert!(f.is_argmax(4));
    }

    #[test]
    fn profile_of_naturals() {
        let n = NumericalSemigroup::naturals();
        let r = profile(&n, DomainKind::RestrictedToS);
        assert_eq!((r.max_value, r.argmax.as_slice()), (HalfInt::ZERO, &[0][..]));
        assert_eq!(clifford_defect(&n), HalfInt::ZERO);
        assert_eq!(duursma_defect(&n), HalfInt::ZERO);
    }

    #[test]
    fn defects() {
        let s = sg(&[3, 5]);
        assert_eq!(clifford_defect(&s), HalfInt::HALF);
        assert_eq!(duursma_defect(&s), HalfInt::ONE);
        for g in 1..30 {
            let h = sg(&[2, 2 * g + 1]);
            assert_eq!(duursma_defect(&h), HalfInt::HALF);
            assert_eq!(clifford_defect(&h), HalfInt::ZERO);
            // σ(2g − 1) = 1/2 while σ(2g + 1), one past the domain, would be −1/2.
            assert_eq!(sigma(&h, 2 * g - 1).unwrap(), HalfInt::HALF);
        }
    }

    #[test]
    fn comparator() {
        let s = sg(&[3, 5]);
        assert_eq!(sigma_compare(&s, 3, 5).unwrap(), Ordering::Equal);
        assert_eq!(sigma_compare(&s, 5, 6).unwrap(), Ordering::Greater);
        assert_eq!(sigma_compare(&s, 6, 6).unwrap(), Ordering::Equal);
        assert_eq!(sigma_compare(&s, 0, 3).unwrap(), Ordering::Less);
        assert!(sigma_compare(&s, 5, 3).is_err());
        assert!(sigma_compare(&s, 4, 5).is_err());
        assert!(sigma_compare(&s, 3, 9).is_err());
    }
}
