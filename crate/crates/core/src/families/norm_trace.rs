use alloc::vec::Vec;

use super::{Family, FamilyKind};
use crate::arith::{self, binom2, ceil_div, floor_sum};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// S = ⟨q^{r−1}, (q^r − 1)/(q − 1)⟩.
///
/// With A = (q^{r−1} − 1)/(q − 1), members are λ₁A + λ₂ with
/// λ₁/q ≤ λ₂ ≤ λ₁/(q − 1), and up to the conductor lexicographic order on
/// (λ₁, λ₂) is numeric order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormTrace {
    q: u64,
    r: u32,
    /// q^{r−1}
    p: u64,
    /// (q^{r−1} − 1)/(q − 1)
    a: u64,
    /// (q^r − 1)/(q − 1)
    b: u64,
}

impl NormTrace {
    pub fn new(q: u64, r: u32) -> Result<Self> {
        if q < 2 || r < 2 {
            return Err(Error::invalid(alloc::format!(
                "norm-trace family needs q ≥ 2 and r ≥ 2, got q = {q}, r = {r}"
            )));
        }
        let qi = q as i128;
        let p = arith::pow(qi, r - 1)?;
        let a = arith::exact_div(p - 1, qi - 1)?;
        let b = arith::exact_div(arith::mul(p, qi)? - 1, qi - 1)?;
        let f = NormTrace {
            q,
            r,
            p: arith::to_u64(p)?,
            a: arith::to_u64(a)?,
            b: arith::to_u64(b)?,
        };
        f.conductor()?;
        Ok(f)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    fn genus_i(&self) -> Result<i128> {
        // q(q^{r−1} − 1)² / (2(q − 1))
        let q = self.q as i128;
        let pm1 = self.p as i128 - 1;
        arith::exact_div(arith::mul(q, arith::mul(pm1, pm1)?)?, 2 * (q - 1))
    }

    fn row_lo(&self, l1: i128) -> i128 {
        ceil_div(l1, self.q as i128)
    }

    fn row_hi(&self, l1: i128) -> i128 {
        l1 / (self.q as i128 - 1)
    }

    /// Number of members in rows 0, …, L − 1:
    /// Σ_{i<L} (⌊i/(q−1)⌋ − ⌈i/q⌉ + 1) = C(k+2, 2) + Σ_{i<k+e} ⌊i/(q−1)⌋
    /// with L = kq + e, 1 ≤ e ≤ q.
    fn full_rows(&self, rows: i128) -> Result<i128> {
        if rows == 0 {
            return Ok(0);
        }
        let q = self.q as i128;
        let k = (rows - 1) / q;
        let e = rows - k * q;
        arith::add(binom2(k + 2)?, floor_sum(k + e, q - 1)?)
    }

    /// l(x) for 0 ≤ x ≤ c via the row counts.
    fn count(&self, x: u64) -> Result<u64> {
        let c = self.conductor()?;
        if x > c {
            return Err(Error::invalid(alloc::format!(
                "norm-trace fast count is valid on [0, c] = [0, {c}], got {x}"
            )));
        }
        let (a, x) = (self.a as i128, x as i128);
        let row_min = |l1: i128| -> Result<i128> { arith::add(arith::mul(l1, a)?, self.row_lo(l1)) };
        // Largest λ₁ whose first element is ≤ x; row minima increase with λ₁.
        let (mut lo, mut hi) = (0i128, x / a);
        while lo < hi {
            let mid = lo + (hi - lo + 1) / 2;
            if row_min(mid)? <= x {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let mut l1 = lo;
        while self.row_lo(l1) > self.row_hi(l1) {
            l1 -= 1;
        }
        let top = self.row_hi(l1).min(x - l1 * a);
        let partial = top - self.row_lo(l1) + 1;
        arith::to_u64(arith::add(self.full_rows(l1)?, partial)?)
    }

    /// σ at the closed-form maximizer, computed through the row counts.
    pub fn defect_via_count(&self) -> Result<HalfInt> {
        let s = self.argmax()?;
        let l = self.count(s)? as i128;
        Ok(HalfInt::from_twice(arith::add(arith::sub(s as i128, arith::mul(2, l)?)?, 2)?))
    }

    /// Members in [0, c] listed by (λ₁, λ₂) in lexicographic order.
    pub fn lex_elements(&self) -> Result<Vec<u64>> {
        let c = self.conductor()? as i128;
        let a = self.a as i128;
        let mut out = Vec::new();
        for l1 in 0..=c / a {
            for l2 in self.row_lo(l1)..=self.row_hi(l1) {
                let x = l1 * a + l2;
                if x <= c {
                    out.push(x as u64);
                }
            }
        }
        Ok(out)
    }
}

impl Family for NormTrace {
    fn kind(&self) -> FamilyKind {
        FamilyKind::NormTrace
    }

    fn params(&self) -> Vec<(&'static str, u64)> {
        alloc::vec![("q", self.q), ("r", u64::from(self.r))]
    }

    fn generators(&self) -> Result<Vec<u64>> {
        Ok(alloc::vec![self.p, self.b])
    }

    fn genus(&self) -> Result<u64> {
        arith::to_u64(self.genus_i()?)
    }

    fn conductor(&self) -> Result<u64> {
        arith::to_u64(arith::mul(2, self.genus_i()?)?)
    }

    /// g for odd q, g − q^{r−1}/2 for even q.
    fn argmax(&self) -> Result<u64> {
        let g = self.genus()?;
        Ok(if self.q % 2 == 1 { g } else { g - self.p / 2 })
    }

    fn defect(&self) -> Result<Option<HalfInt>> {
        let q = self.q as i128;
        let r = self.r;
        let pw = |e: u32| arith::pow(q, e);
        let den = 8 * (q - 1);
        let twice = if q % 2 == 0 {
            // (q/(8(q−1)))(q^{2r−2} − 4q^{r−1} + 2q^{r−2} + q)
            let inner = arith::add(
                arith::sub(pw(2 * r - 2)?, arith::mul(4, pw(r - 1)?)?)?,
                arith::add(arith::mul(2, pw(r - 2)?)?, q)?,
            )?;
            arith::exact_div(arith::mul(2, arith::mul(q, inner)?)?, den)?
        } else {
            // (q^{2r−1} − 4q^r + 2q^{r−1} + q² + q − 1) / (8(q−1)) for even r,
            // (q^{2r−1} − 4q^r + 2q^{r−1} + 3q − 2) / (8(q−1)) for odd r.
            let tail = if r.is_multiple_of(2) { q * q + q - 1 } else { 3 * q - 2 };
            let num = [pw(2 * r - 1)?, -arith::mul(4, pw(r)?)?, arith::mul(2, pw(r - 1)?)?, tail]
                .into_iter()
                .try_fold(0i128, arith::add)?;
            arith::exact_div(arith::mul(2, num)?, den)?
        };
        Ok(Some(HalfInt::from_twice(twice)))
    }

    fn contains(&self, x: u64) -> bool {
        // x = λ₁A + λ₂ with (q−1)λ₂ ≤ λ₁ ≤ qλ₂ forces λ₂q^{r−1} ≤ x ≤ λ₂·B.
        let x = x as u128;
        let (a, p, b) = (self.a as u128, self.p as u128, self.b as u128);
        let lo = x.div_ceil(b);
        let hi = x / p;
        if lo > hi {
            return false;
        }
        // λ₂ ≡ x (mod A)
        let first = lo + (x % a + a - lo % a) % a;
        first <= hi
    }

    fn fast_count(&self, x: u64) -> Option<Result<u64>> {
        Some(self.count(x))
    }

    fn fast_count_limit(&self) -> Result<u64> {
        self.conductor()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{FamilyResult, Interval};
    use crate::semigroup::NumericalSemigroup;

    fn eval(q: u64, r: u32) -> FamilyResult {
        FamilyResult::evaluate(&NormTrace::new(q, r).unwrap(), 100_000).unwrap()
    }

    #[test]
    fn two_three() {
        let r = eval(2, 3);
        assert_eq!(r.generators, [4, 7]);
        assert_eq!(r.genus_formula, 9);
        assert_eq!((r.argmax_closed_form, r.defect_closed_form), (7, Some(HalfInt::from_twice(3))));
        let v = r.verify().unwrap();
        assert_eq!(v.oracle_argmax, [7, 11]);
        assert!(v.passed());
    }

    #[test]
    fn three_two() {
        let r = eval(3, 2);
        assert_eq!(r.generators, [3, 4]);
        assert_eq!((r.argmax_closed_form, r.defect_closed_form), (3, Some(HalfInt::HALF)));
        assert!(r.verify().unwrap().passed());
    }

    #[test]
    fn r_two_even_q_matches_interval() {
        for q in [2u64, 4, 8, 16] {
            let nt = NormTrace::new(q, 2).unwrap();
            let iv = Interval::new(q, 1).unwrap();
            assert_eq!(nt.defect().unwrap(), iv.defect().unwrap());
            assert_eq!(nt.defect().unwrap(), Some(HalfInt::from_twice((q * (q - 2) / 4) as i128)));
            assert_eq!(nt.argmax().unwrap(), iv.argmax().unwrap());
            assert_eq!(nt.argmax().unwrap(), (q - 2) / 2 * q);
        }
    }

    #[test]
    fn count_covers_whole_conductor_range() {
        for (q, r) in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 3), (5, 2), (2, 5), (3, 4)] {
            let f = NormTrace::new(q, r).unwrap();
            let s = NumericalSemigroup::from_generators(&f.generators().unwrap()).unwrap();
            for x in 0..=s.conductor() {
                assert_eq!(f.count(x).unwrap(), s.count_up_to(x as i64), "q={q} r={r} x={x}");
            }
        }
    }

    #[test]
    fn count_agrees_with_formula_beyond_desk_scale() {
        for (q, r) in [(16, 3), (11, 4), (13, 3), (32, 3), (7, 5), (3, 7), (5, 7), (4, 7), (27, 3), (9, 5)] {
            let f = NormTrace::new(q, r).unwrap();
            assert_eq!(Some(f.defect_via_count().unwrap()), f.defect().unwrap(), "q={q} r={r}");
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(NormTrace::new(1, 3).is_err());
        assert!(NormTrace::new(3, 1).is_err());
        assert_eq!(NormTrace::new(1 << 40, 5), Err(Error::Overflow));
    }
}
