use alloc::vec::Vec;

use super::{Family, FamilyKind};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// S = ⟨2, 2g+1⟩, a sparse semigroup of genus g.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hyperelliptic {
    g: u64,
}

impl Hyperelliptic {
    pub fn new(g: u64) -> Result<Self> {
        if g == 0 {
            return Err(Error::invalid("hyperelliptic family needs g ≥ 1"));
        }
        g.checked_mul(2).and_then(|v| v.checked_add(1)).ok_or(Error::Overflow)?;
        Ok(Hyperelliptic { g })
    }

    /// Maximum of σ over all of [0, c].
    pub fn duursma_defect(&self) -> HalfInt {
        HalfInt::HALF
    }
}

impl Family for Hyperelliptic {
    fn kind(&self) -> FamilyKind {
        FamilyKind::Hyperelliptic
    }

    fn params(&self) -> Vec<(&'static str, u64)> {
        alloc::vec![("g", self.g)]
    }

    fn generators(&self) -> Result<Vec<u64>> {
        Ok(alloc::vec![2, 2 * self.g + 1])
    }

    fn genus(&self) -> Result<u64> {
        Ok(self.g)
    }

    fn conductor(&self) -> Result<u64> {
        Ok(2 * self.g)
    }

    /// Sparse, so σ peaks at the conductor (tied with every even point below).
    fn argmax(&self) -> Result<u64> {
        Ok(2 * self.g)
    }

    fn defect(&self) -> Result<Option<HalfInt>> {
        Ok(Some(HalfInt::ZERO))
    }

    fn contains(&self, x: u64) -> bool {
        x.is_multiple_of(2) || x > 2 * self.g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::duursma_defect;
    use crate::families::FamilyResult;

    #[test]
    fn genus_one_and_two() {
        for (g, gens) in [(1, [2, 3]), (2, [2, 5])] {
            let r = FamilyResult::evaluate(&Hyperelliptic::new(g).unwrap(), 1000).unwrap();
            let s = r.semigroup.as_ref().unwrap();
            assert_eq!(s.generators(), gens);
            let v = r.verify().unwrap();
            assert!(v.passed());
            assert_eq!(v.oracle_defect, HalfInt::ZERO);
            assert_eq!(duursma_defect(s), HalfInt::HALF);
            assert!(s.is_sparse());
            assert!(v.oracle_argmax.contains(&s.conductor()));
        }
    }

    #[test]
    fn ties_on_all_even_points() {
        let r = FamilyResult::evaluate(&Hyperelliptic::new(5).unwrap(), 1000).unwrap();
        assert_eq!(r.verify().unwrap().oracle_argmax, [0, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn rejects_zero() {
        assert!(Hyperelliptic::new(0).is_err());
    }
}
