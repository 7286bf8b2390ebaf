use std::cmp::Ordering;

use clifford_core::families::{Family, HermitianQuotient, Interval, NormTrace};
use clifford_core::invariants::check;
use clifford_core::{
    bound_report, clifford_defect, duursma_defect, sigma, sigma_compare, HalfInt, NumericalSemigroup,
};
use proptest::prelude::*;

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2u64..60, 1..5).prop_filter_map("gcd ≠ 1", |gens| {
        NumericalSemigroup::from_generators(&gens).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn checker_finds_nothing(s in semigroup()) {
        let r = check(&s);
        prop_assert!(r.passed(), "{}: {:?}", s, r.violations);
    }

    #[test]
    fn sigma_is_exact_half_integer_formula(s in semigroup(), frac in 0.0f64..=1.0) {
        let x = (frac * s.conductor() as f64) as u64;
        let v = sigma(&s, x).unwrap();
        prop_assert_eq!(v.twice(), x as i128 - 2 * s.count_up_to(x as i64) as i128 + 2);
        prop_assert!(sigma(&s, s.conductor() + 1).is_err());
    }

    #[test]
    fn sigma_at_conductor_is_g_minus_half_c(s in semigroup()) {
        let expected = 2 * s.genus() as i128 - s.conductor() as i128;
        prop_assert_eq!(sigma(&s, s.conductor()).unwrap(), HalfInt::from_twice(expected));
    }

    #[test]
    fn comparator_matches_direct(s in semigroup(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let members: Vec<u64> = s.members().collect();
        let (a, b) = (*i.get(&members), *j.get(&members));
        let (a, b) = (a.min(b), a.max(b));
        let direct = sigma(&s, a).unwrap().cmp(&sigma(&s, b).unwrap());
        prop_assert_eq!(sigma_compare(&s, a, b).unwrap(), direct);
    }

    #[test]
    fn comparator_rejects_gaps_and_reversed_pairs(s in semigroup()) {
        if let Some(gap) = s.gaps().next() {
            prop_assert!(sigma_compare(&s, 0, gap).is_err());
        }
        let m = s.multiplicity();
        prop_assert!(sigma_compare(&s, m, 0).is_err());
        prop_assert_eq!(sigma_compare(&s, m, m).unwrap(), Ordering::Equal);
    }

    #[test]
    fn duursma_is_restricted_plus_half(s in semigroup()) {
        let d = duursma_defect(&s);
        let c = clifford_defect(&s);
        if s.genus() == 0 {
            prop_assert_eq!((c, d), (HalfInt::ZERO, HalfInt::ZERO));
        } else {
            prop_assert_eq!(d, c + HalfInt::HALF);
        }
    }

    #[test]
    fn code_bounds_never_exceed_dimension(s in semigroup(), m in 0u64..400) {
        let r = bound_report(&s, m);
        prop_assert!(r.exact_dimension as i128 >= r.rr_bound_raw);
        prop_assert!(2 * r.exact_dimension as i128 >= r.clifford_bound_exact.twice());
        prop_assert!(r.rr_bound >= 1 && r.clifford_bound >= 1 && r.exact_dimension >= 1);
    }

    #[test]
    fn interval_membership_matches_sieve(m in 2u64..40, h in 1u64..40) {
        prop_assume!(h < m);
        let f = Interval::new(m, h).unwrap();
        let s = f.semigroup().unwrap();
        for x in 0..=s.conductor() + m {
            prop_assert_eq!(f.contains(x), s.contains(x as i64), "x = {}", x);
        }
    }

    #[test]
    fn hermitian_membership_matches_sieve(q in 3u64..80, pick in any::<prop::sample::Index>()) {
        let ms = HermitianQuotient::valid_m(q);
        prop_assume!(!ms.is_empty());
        let f = HermitianQuotient::new(*pick.get(&ms), q).unwrap();
        let s = f.semigroup().unwrap();
        for x in 0..=s.conductor() + q {
            prop_assert_eq!(f.contains(x), s.contains(x as i64), "x = {}", x);
        }
    }

    #[test]
    fn norm_trace_membership_and_count(q in 2u64..8, r in 2u32..5) {
        let f = NormTrace::new(q, r).unwrap();
        prop_assume!(f.conductor().unwrap() <= 20_000);
        let s = f.semigroup().unwrap();
        for x in 0..=s.conductor() {
            prop_assert_eq!(f.contains(x), s.contains(x as i64));
            prop_assert_eq!(f.fast_count(x).unwrap().unwrap(), s.count_up_to(x as i64));
        }
    }

    #[test]
    fn halfint_ordering_matches_rationals(a in -10_000i128..10_000, b in -10_000i128..10_000) {
        let (x, y) = (HalfInt::from_twice(a), HalfInt::from_twice(b));
        prop_assert_eq!(x.cmp(&y), a.cmp(&b));
        prop_assert_eq!((x + y).twice(), a + b);
        prop_assert!(x.floor() * 2 <= a && a - x.floor() * 2 < 2);
        prop_assert!(x.ceil() * 2 >= a && x.ceil() * 2 - a < 2);
    }
}
