//! Dimension bounds for one-point codes and the error-correction capability of
//! the Modified Algorithm, both driven by the Duursma defect s(Q).

use crate::clifford::duursma_defect;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::semigroup::NumericalSemigroup;

/// Which raw lower bound on l(mQ) is larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundWinner {
    RiemannRoch,
    Clifford,
    Tie,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeBoundReport {
    pub m: u64,
    pub genus: u64,
    /// s(Q), maximized over all of [0, c].
    pub defect: HalfInt,
    /// m − g + 1, possibly nonpositive.
    pub rr_bound_raw: i128,
    /// m/2 + 1 − s(Q) before rounding.
    pub clifford_bound_exact: HalfInt,
    /// ⌈m/2 + 1 − s(Q)⌉, possibly nonpositive.
    pub clifford_bound_raw: i128,
    /// Raw bounds clamped at the trivial l(mQ) ≥ 1.
    pub rr_bound: u64,
    pub clifford_bound: u64,
    /// l(m) = |S ∩ [0, m]|.
    pub exact_dimension: u64,
    pub winner: BoundWinner,
    /// Integer m-range where 2(s(Q) − 1) ≤ m ≤ 2(g − s(Q) − 1), if nonempty.
    pub clifford_wins_interval: Option<(u64, u64)>,
}

/// Both lower bounds on l(mQ) next to its exact value.
pub fn bound_report(s: &NumericalSemigroup, m: u64) -> CodeBoundReport {
    let defect = duursma_defect(s);
    report_with_defect(s, m, defect)
}

pub(crate) fn report_with_defect(s: &NumericalSemigroup, m: u64, defect: HalfInt) -> CodeBoundReport {
    let g = s.genus();
    let rr_bound_raw = m as i128 - g as i128 + 1;
    let clifford_bound_exact = HalfInt::from_twice(m as i128 + 2) - defect;
    let clifford_bound_raw = clifford_bound_exact.ceil();
    let winner = match clifford_bound_raw.cmp(&rr_bound_raw) {
        core::cmp::Ordering::Greater => BoundWinner::Clifford,
        core::cmp::Ordering::Less => BoundWinner::RiemannRoch,
        core::cmp::Ordering::Equal => BoundWinner::Tie,
    };
    let lo = (defect.twice() - 2).max(0);
    let hi = 2 * g as i128 - defect.twice() - 2;
    let clifford_wins_interval = (lo <= hi).then_some((lo as u64, hi as u64));

    CodeBoundReport {
        m,
        genus: g,
        defect,
        rr_bound_raw,
        clifford_bound_exact,
        clifford_bound_raw,
        rr_bound: rr_bound_raw.max(1) as u64,
        clifford_bound: clifford_bound_raw.max(1) as u64,
        exact_dimension: s.count_up_to(m as i64),
        winner,
        clifford_wins_interval,
    }
}

/// Number of errors the Modified Algorithm corrects on a code of minimum
/// distance `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaCapability {
    /// ⌊⌈(d − 1)/2⌉ − s(Q)⌋, floored at zero.
    pub errors: u64,
    /// Set when the unclamped value was negative.
    pub clamped: bool,
    pub defect: HalfInt,
}

pub fn ma_capability(s: &NumericalSemigroup, d: u64) -> Result<MaCapability> {
    if d < 1 {
        return Err(Error::invalid("minimum distance must be at least 1"));
    }
    let defect = duursma_defect(s);
    let half = d as i128 / 2; // ⌈(d − 1)/2⌉ = ⌊d/2⌋
    let value = HalfInt::from_int(half)?.checked_sub(defect)?.floor();
    Ok(MaCapability {
        errors: value.max(0) as u64,
        clamped: value < 0,
        defect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn three_five_m4() {
        let r = bound_report(&sg(&[3, 5]), 4);
        assert_eq!(r.rr_bound_raw, 1);
        assert_eq!(r.clifford_bound_raw, 2);
        assert_eq!(r.exact_dimension, 2);
        assert_eq!(r.winner, BoundWinner::Clifford);
        assert_eq!(r.defect, HalfInt::ONE);
        // s(Q) = 1, g = 4: 0 ≤ m ≤ 4.
        assert_eq!(r.clifford_wins_interval, Some((0, 4)));
    }

    #[test]
    fn three_five_m6() {
        let r = bound_report(&sg(&[3, 5]), 6);
        assert_eq!((r.rr_bound_raw, r.clifford_bound_raw), (3, 3));
        assert_eq!(r.exact_dimension, 4);
        assert_eq!(r.winner, BoundWinner::Tie);
    }

    #[test]
    fn naturals_m0() {
        let r = bound_report(&NumericalSemigroup::naturals(), 0);
        assert_eq!((r.rr_bound_raw, r.clifford_bound_raw, r.exact_dimension), (1, 1, 1));
        assert_eq!(r.winner, BoundWinner::Tie);
    }

    #[test]
    fn clamping() {
        let r = bound_report(&sg(&[7, 9]), 2);
        assert!(r.rr_bound_raw < 1);
        assert_eq!(r.rr_bound, 1);
        assert_eq!(r.exact_dimension, 1);
    }

    #[test]
    fn ma() {
        let s = sg(&[3, 5]);
        assert_eq!(ma_capability(&s, 5).unwrap().errors, 1);
        assert_eq!(ma_capability(&NumericalSemigroup::naturals(), 3).unwrap().errors, 1);
        let z = ma_capability(&s, 2).unwrap();
        assert_eq!((z.errors, z.clamped), (0, false));
        let neg = ma_capability(&s, 1).unwrap();
        assert_eq!((neg.errors, neg.clamped), (0, true));
        assert!(ma_capability(&s, 0).is_err());
    }
}
