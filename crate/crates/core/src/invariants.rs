//! Structural and Clifford-map invariants every numerical semigroup must
//! satisfy, checked exhaustively (or on a deterministic sample where the
//! statement quantifies over pairs of intervals).
//!
//! [`check`] never panics on a bad semigroup; it reports each failed property
//! by name so sweeps and tests can print a precise diagnostic.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::clifford::{profile, sigma_compare, CliffordProfile, DomainKind};
use crate::codes::report_with_defect;
use crate::families::monotone_block_maximizer;
use crate::halfint::HalfInt;
use crate::semigroup::NumericalSemigroup;

/// A failed property and the first witness found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub property: &'static str,
    pub detail: String,
}

/// Which conditional groups of properties applied to the semigroup.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    pub symmetric: bool,
    pub max_embedding: bool,
    pub sparse: bool,
    pub monotone_blocks: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub violations: Vec<Violation>,
    pub coverage: Coverage,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, property: &'static str, detail: String) {
        self.violations.push(Violation { property, detail });
    }

    fn require(&mut self, property: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(property, detail());
        }
    }
}

/// 2σ(x) for any x ≥ 0, using l(x) = x − g + 1 past the conductor.
fn sigma2(s: &NumericalSemigroup, x: u64) -> i128 {
    x as i128 - 2 * s.count_up_to(x as i64) as i128 + 2
}

/// Runs every applicable check.
pub fn check(s: &NumericalSemigroup) -> Report {
    let mut r = Report::default();
    let restricted = profile(s, DomainKind::RestrictedToS);
    let full = profile(s, DomainKind::FullInterval);

    structure(s, &mut r);
    apery(s, &mut r);
    clifford_basics(s, &restricted, &full, &mut r);
    comparator(s, &mut r);
    monotone_pairs(s, &mut r);
    phi_counting(s, &mut r);
    translation(s, &mut r);
    code_bounds(s, &full, &mut r);

    if s.is_sparse() {
        r.coverage.sparse = true;
        let c = s.conductor();
        r.require("sparse rule", restricted.is_argmax(c), || format!("c = {c} not a maximizer"));
    }
    if s.is_symmetric() {
        r.coverage.symmetric = true;
        symmetric(s, &restricted, &mut r);
    }
    if s.has_max_embedding_dimension() && s.genus() > 0 {
        r.coverage.max_embedding = true;
        max_embedding(s, &restricted, &mut r);
    }
    if let Ok((a, v)) = monotone_block_maximizer(s) {
        r.coverage.monotone_blocks = true;
        r.require(
            "monotone blocks",
            restricted.is_argmax(a) && v == restricted.max_value,
            || format!("formula gives ({a}, {v}), oracle max {}", restricted.max_value),
        );
    }
    r
}

fn structure(s: &NumericalSemigroup, r: &mut Report) {
    let c = s.conductor();
    let gaps: Vec<u64> = s.gaps().collect();
    r.require("genus counts gaps", gaps.len() as u64 == s.genus(), || {
        format!("{} gaps, genus {}", gaps.len(), s.genus())
    });
    r.require(
        "Frobenius is the largest gap",
        gaps.last().map_or(-1, |&f| f as i64) == s.frobenius(),
        || format!("F = {}", s.frobenius()),
    );
    for &gen in s.generators() {
        if let Some(a) = (0..=c.saturating_sub(gen)).find(|&a| s.contains(a as i64) && !s.contains((a + gen) as i64)) {
            r.fail("additive closure", format!("{a} + {gen} ∉ S"));
            break;
        }
        if let Some(a) = (1..gen).find(|&a| s.contains(a as i64) && s.contains((gen - a) as i64)) {
            r.fail("minimal generators", format!("{gen} = {a} + {}", gen - a));
        }
    }
}

fn apery(s: &NumericalSemigroup, r: &mut Report) {
    let m = s.multiplicity();
    let Ok(ap) = s.apery_set(m) else {
        r.fail("Apéry set", format!("no Apéry set for m = {m}"));
        return;
    };
    let mut residues: Vec<u64> = ap.iter().map(|a| a % m).collect();
    residues.sort_unstable();
    residues.dedup();
    r.require("Apéry set size", ap.len() as u64 == m && residues.len() as u64 == m, || {
        format!("{} elements, {} residues, m = {m}", ap.len(), residues.len())
    });
    let max = ap.iter().max().copied().unwrap_or(0) as i64;
    r.require("Apéry maximum is F + m", max == s.frobenius() + m as i64, || {
        format!("max {max}, F + m = {}", s.frobenius() + m as i64)
    });
}

fn clifford_basics(s: &NumericalSemigroup, restricted: &CliffordProfile, full: &CliffordProfile, r: &mut Report) {
    let (g, c) = (s.genus(), s.conductor());
    if let Some(x) = (0..(2 * g).saturating_sub(1)).find(|&x| sigma2(s, x) < 0) {
        r.fail("Clifford's theorem", format!("l({x}) > {x}/2 + 1"));
    }
    if let Some((p, v)) = restricted
        .points
        .iter()
        .zip(&restricted.values)
        .find(|(_, v)| v.twice() < 0 || v.twice() > g as i128)
    {
        r.fail("0 ≤ σ ≤ g/2", format!("σ({p}) = {v}"));
    }
    r.require("maximizer in [c/2, c]", restricted.argmax.iter().any(|&a| 2 * a >= c), || {
        format!("argmax {:?}", restricted.argmax)
    });
    if let Some(&a) = restricted.argmax.iter().find(|&&a| a > 0 && s.contains(a as i64 - 1)) {
        r.fail("maximizer preceded by a gap", format!("{} ∈ S", a - 1));
    }
    let expected = if g == 0 { HalfInt::ZERO } else { restricted.max_value + HalfInt::HALF };
    r.require("full domain adds 1/2", full.max_value == expected, || {
        format!("restricted {}, full {}", restricted.max_value, full.max_value)
    });
}

/// Rule-based comparison of σ at two members against direct evaluation:
/// every pair when S ∩ [0, c] is small, otherwise pairs at a fixed set of
/// strides.
fn comparator(s: &NumericalSemigroup, r: &mut Report) {
    let members: Vec<u64> = s.members().collect();
    let n = members.len();
    let strides: Vec<usize> = if n <= 120 {
        (0..n).collect()
    } else {
        [0, 1, 2, 3, 5, 8, 13, 21, 34, 55, n / 3, n / 2, n - 1].into_iter().filter(|&k| k < n).collect()
    };
    for i in 0..n {
        for &k in &strides {
            let Some(&b) = members.get(i + k) else { continue };
            let a = members[i];
            let direct = sigma2(s, a).cmp(&sigma2(s, b));
            match sigma_compare(s, a, b) {
                Ok(o) if o == direct => {}
                other => {
                    r.fail("comparator", format!("({a}, {b}): {other:?} vs direct {direct:?}"));
                    return;
                }
            }
        }
    }
}

/// σ(s) ≤ σ(s + n) for s ∈ S and 2s + n ≤ F − 1, provided n ∈ S or
/// F − 2s − 1 − n ∈ S. Without that proviso the inequality fails
/// (⟨15, 16, 17⟩, s = 50, n = 1). Starting points are sampled; every
/// admissible n is tried for each.
fn monotone_pairs(s: &NumericalSemigroup, r: &mut Report) {
    let f = s.frobenius();
    if f < 1 {
        return;
    }
    let members: Vec<u64> = s.members().filter(|&x| 2 * (x as i64) < f).collect();
    let step = (members.len() / 40).max(1);
    for &x in members.iter().step_by(step) {
        let room = (f - 1 - 2 * x as i64) as u64;
        let base = sigma2(s, x);
        let ok = (0..=room)
            .filter(|&n| s.contains(n as i64) || s.contains((room - n) as i64))
            .all(|n| base <= sigma2(s, x + n));
        if !ok {
            r.fail("σ(s) ≤ σ(s + n) below F", format!("s = {x}"));
            return;
        }
    }
}

/// Members never pair up under φ, so for x ≤ y ≤ F the members of
/// [φ(y), φ(x)] number at most the gaps of [x, y].
fn phi_counting(s: &NumericalSemigroup, r: &mut Report) {
    let f = s.frobenius();
    if f < 0 {
        return;
    }
    if let Some(x) = (0..=f).find(|&x| s.contains(x) && s.contains(f - x)) {
        r.fail("φ pairing", format!("{x} and {} both in S", f - x));
        return;
    }
    for (x, y) in sample_windows(f as u64) {
        let (x, y) = (x as i64, y as i64);
        let lhs = s.count_between(f - y, f - x);
        let rhs = (y - x + 1) as u64 - s.count_between(x, y);
        if lhs > rhs {
            r.fail("φ counting", format!("[{x}, {y}]"));
            return;
        }
    }
}

/// |S ∩ [x, x+n−1]| ≤ |S ∩ [x+y, x+y+n−1]| when y ∈ S or n ∈ S.
fn translation(s: &NumericalSemigroup, r: &mut Report) {
    let c = s.conductor();
    let shifts: Vec<u64> = s.members().step_by(((c / 40) as usize).max(1)).collect();
    for (x, end) in sample_windows(c) {
        let n = end - x + 1;
        for &y in &shifts {
            let (xi, ni, yi) = (x as i64, n as i64, y as i64);
            if s.count_between(xi, xi + ni - 1) > s.count_between(xi + yi, xi + yi + ni - 1) {
                r.fail("interval translation", format!("x = {x}, n = {n}, y = {y}"));
                return;
            }
        }
        // Shift by a non-member y with n ∈ S.
        if s.contains(n as i64) {
            if let Some(y) = s.gaps().nth((x % (s.genus().max(1))) as usize) {
                let (xi, ni, yi) = (x as i64, n as i64, y as i64);
                if s.count_between(xi, xi + ni - 1) > s.count_between(xi + yi, xi + yi + ni - 1) {
                    r.fail("interval translation", format!("x = {x}, n = {n} ∈ S, y = {y}"));
                    return;
                }
            }
        }
    }
}

/// Deterministic windows [x, y] ⊆ [0, limit]: every window when the range is
/// tiny, otherwise a spread of starts and lengths.
fn sample_windows(limit: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    if limit <= 40 {
        for x in 0..=limit {
            for y in x..=limit {
                out.push((x, y));
            }
        }
        return out;
    }
    let step = (limit / 30).max(1);
    for x in (0..=limit).step_by(step as usize) {
        for len in [0, 1, 2, 3, 7, step, limit / 4, limit / 2] {
            if x + len <= limit {
                out.push((x, x + len));
            }
        }
    }
    out
}

fn code_bounds(s: &NumericalSemigroup, full: &CliffordProfile, r: &mut Report) {
    for m in 0..=s.conductor() {
        let b = report_with_defect(s, m, full.max_value);
        let exact = b.exact_dimension as i128;
        if exact < b.rr_bound_raw || 2 * exact < b.clifford_bound_exact.twice() {
            r.fail("code bounds are lower bounds", format!("m = {m}: {b:?}"));
            return;
        }
        if let Some((lo, hi)) = b.clifford_wins_interval {
            if (lo..=hi).contains(&m) && b.clifford_bound_raw < b.rr_bound_raw {
                r.fail("Clifford bound wins on its interval", format!("m = {m}: {b:?}"));
                return;
            }
        }
    }
}

fn symmetric(s: &NumericalSemigroup, restricted: &CliffordProfile, r: &mut Report) {
    let (g, m, f) = (s.genus(), s.multiplicity(), s.frobenius());
    let l = |x: i64| s.count_up_to(x) as i64;
    if let Some(x) = (0..=s.conductor() as i64 + 2).find(|&x| l(x) != x + l(f - 1 - x) - g as i64 + 1) {
        r.fail("Riemann-Roch", format!("x = {x}"));
    }
    for s_el in s.members().filter(|&x| (x as i64) <= f) {
        let phi = (f - s_el as i64) as u64;
        if sigma2(s, s_el) != sigma2(s, phi) - 1 {
            r.fail("σ(s) = σ(φ(s)) − 1/2", format!("s = {s_el}"));
            break;
        }
    }
    let lo = g.saturating_sub(m.div_ceil(2));
    r.require("maximizer in [g − ⌈m/2⌉, g]", restricted.argmax.iter().any(|&a| lo <= a && a <= g), || {
        format!("argmax {:?}, window [{lo}, {g}]", restricted.argmax)
    });
    for &a in restricted.argmax.iter().filter(|&&a| (a as i64) <= f) {
        let other = (f - a as i64 + 1) as u64;
        if sigma2(s, a) != sigma2(s, other) {
            r.fail("σ(s) = σ(φ(s) + 1) at maximizers", format!("s = {a}"));
            break;
        }
    }
}

fn max_embedding(s: &NumericalSemigroup, restricted: &CliffordProfile, r: &mut Report) {
    let m = s.multiplicity();
    let t = match s.derived_semigroup() {
        Ok(t) => t,
        Err(e) => {
            r.fail("derived semigroup", format!("{e}"));
            return;
        }
    };
    let rebuilt = (0..=s.conductor()).all(|x| s.contains(x as i64) == (x == 0 || (x >= m && t.contains((x - m) as i64))));
    r.require("S = (m + T) ∪ {0}", rebuilt, || format!("T = {t}"));
    let tp = profile(&t, DomainKind::RestrictedToS);
    for (&x, &v) in tp.points.iter().zip(&tp.values) {
        if sigma2(s, x + m) != v.twice() + m as i128 - 2 {
            r.fail("σ_S(s) = σ_T(s − m) + m/2 − 1", format!("s = {}", x + m));
            break;
        }
    }
    let nonzero: Vec<u64> = restricted.argmax.iter().copied().filter(|&a| a > 0).collect();
    let shifted: Vec<u64> = tp.argmax.iter().map(|a| a + m).collect();
    r.require("argmax_S = m + argmax_T", nonzero == shifted, || {
        format!("{:?} vs {:?}", nonzero, shifted)
    });
}
