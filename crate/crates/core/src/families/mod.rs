//! Closed-form Clifford results for classical semigroup families.
//!
//! Each family type exposes its generators, genus, conductor, a fast
//! membership test built from its parametrization, and the closed-form
//! maximizer of σ over S ∩ [0, c] (plus the defect value where one is known).
//! [`FamilyResult::verify`] replays everything against the brute-force oracle.

use alloc::vec::Vec;

use crate::clifford::{profile, DomainKind};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::semigroup::NumericalSemigroup;
use crate::DEFAULT_CONDUCTOR_CAP;

mod blocks;
mod hermitian;
mod hyperelliptic;
mod interval;
mod klein;
mod norm_trace;
mod pedersen_sorensen;
mod suzuki;

pub use blocks::{block_decomposition, monotone_block_maximizer, Block};
pub use hermitian::HermitianQuotient;
pub use hyperelliptic::Hyperelliptic;
pub use interval::Interval;
pub use klein::Klein;
pub use norm_trace::NormTrace;
pub use pedersen_sorensen::{Characteristic, PedersenSorensen};
pub use suzuki::Suzuki;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Interval,
    Klein,
    HermitianQuotient,
    PedersenSorensen,
    Suzuki,
    NormTrace,
    Hyperelliptic,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Interval,
        FamilyKind::Klein,
        FamilyKind::HermitianQuotient,
        FamilyKind::PedersenSorensen,
        FamilyKind::Suzuki,
        FamilyKind::NormTrace,
        FamilyKind::Hyperelliptic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Interval => "interval",
            FamilyKind::Klein => "klein",
            FamilyKind::HermitianQuotient => "hermitian-quotient",
            FamilyKind::PedersenSorensen => "pedersen-sorensen",
            FamilyKind::Suzuki => "suzuki",
            FamilyKind::NormTrace => "norm-trace",
            FamilyKind::Hyperelliptic => "hyperelliptic",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl core::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// A parametrized semigroup family with closed-form Clifford data.
pub trait Family {
    fn kind(&self) -> FamilyKind;

    /// Named integer parameters, in a fixed order.
    fn params(&self) -> Vec<(&'static str, u64)>;

    /// Generating set (not necessarily minimal).
    fn generators(&self) -> Result<Vec<u64>>;

    fn genus(&self) -> Result<u64>;

    fn conductor(&self) -> Result<u64>;

    /// Closed-form maximizer of σ on S ∩ [0, c].
    fn argmax(&self) -> Result<u64>;

    /// Closed-form maximum of σ on S ∩ [0, c], when known.
    fn defect(&self) -> Result<Option<HalfInt>>;

    /// Membership from the family's parametrization, without a bitmap.
    fn contains(&self, x: u64) -> bool;

    /// l(x) from the parametrization, for families that have one.
    fn fast_count(&self, _x: u64) -> Option<Result<u64>> {
        None
    }

    /// Upper end of the range on which `fast_count` is valid.
    fn fast_count_limit(&self) -> Result<u64> {
        Ok(0)
    }

    fn semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_generators(&self.generators()?)
    }
}

/// Closed-form data for one family instance, with the semigroup attached when
/// its conductor is small enough to sieve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyResult {
    pub kind: FamilyKind,
    pub params: Vec<(&'static str, u64)>,
    pub generators: Vec<u64>,
    pub genus_formula: u64,
    pub conductor_formula: u64,
    pub argmax_closed_form: u64,
    pub defect_closed_form: Option<HalfInt>,
    pub semigroup: Option<NumericalSemigroup>,
    fast_count: Option<Vec<u64>>,
    membership_agrees: Option<bool>,
}

/// Outcome of replaying a [`FamilyResult`] against the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub oracle_genus: u64,
    pub oracle_defect: HalfInt,
    pub oracle_argmax: Vec<u64>,
    pub genus_ok: bool,
    pub argmax_ok: bool,
    /// `None` when the family gives no closed-form defect.
    pub defect_ok: Option<bool>,
    /// Fast membership agrees with the sieve on [0, c].
    pub membership_ok: bool,
    /// Fast counting agrees with the sieve on [0, min(g, c)], if available.
    pub fast_count_ok: Option<bool>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.genus_ok
            && self.argmax_ok
            && self.defect_ok != Some(false)
            && self.membership_ok
            && self.fast_count_ok != Some(false)
    }
}

impl FamilyResult {
    /// Evaluates the closed forms; sieves the semigroup when the conductor is
    /// at most `cap`.
    pub fn evaluate<F: Family + ?Sized>(family: &F, cap: u64) -> Result<Self> {
        let conductor = family.conductor()?;
        let genus = family.genus()?;
        let mut result = FamilyResult {
            kind: family.kind(),
            params: family.params(),
            generators: family.generators()?,
            genus_formula: genus,
            conductor_formula: conductor,
            argmax_closed_form: family.argmax()?,
            defect_closed_form: family.defect()?,
            semigroup: None,
            fast_count: None,
            membership_agrees: None,
        };
        if conductor <= cap {
            let s = family.semigroup()?;
            result.membership_agrees =
                Some((0..=s.conductor()).all(|x| family.contains(x) == s.contains(x as i64)));
            let limit = family.fast_count_limit()?.min(s.conductor()).min(s.genus());
            result.fast_count = (0..=limit)
                .map(|x| family.fast_count(x))
                .collect::<Option<Result<Vec<u64>>>>()
                .transpose()?;
            result.semigroup = Some(s);
        }
        Ok(result)
    }

    pub fn param(&self, name: &str) -> Option<u64> {
        self.params.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    /// Replays the closed forms against the exhaustive oracle. `None` when the
    /// semigroup was not materialized.
    pub fn verify(&self) -> Option<Verification> {
        let s = self.semigroup.as_ref()?;
        let p = profile(s, DomainKind::RestrictedToS);
        let fast_count_ok = self.fast_count.as_ref().map(|counts| {
            counts
                .iter()
                .enumerate()
                .all(|(x, &l)| s.count_up_to(x as i64) == l)
        });
        Some(Verification {
            oracle_genus: s.genus(),
            genus_ok: s.genus() == self.genus_formula && s.conductor() == self.conductor_formula,
            argmax_ok: p.is_argmax(self.argmax_closed_form),
            defect_ok: self.defect_closed_form.map(|d| d == p.max_value),
            membership_ok: self.membership_agrees.unwrap_or(false),
            fast_count_ok,
            oracle_defect: p.max_value,
            oracle_argmax: p.argmax,
        })
    }
}

/// ⟨m, m+1, …, m+h⟩.
pub fn interval(m: u64, h: u64) -> Result<FamilyResult> {
    FamilyResult::evaluate(&Interval::new(m, h)?, DEFAULT_CONDUCTOR_CAP)
}

/// {i(m−1) + jm : j ≥ 1} ∪ {0}.
pub fn klein(m: u64) -> Result<FamilyResult> {
    FamilyResult::evaluate(&Klein::new(m)?, DEFAULT_CONDUCTOR_CAP)
}

/// ⟨m, q⟩ with m | q + 1.
pub fn hermitian_quotient(m: u64, q: u64) -> Result<FamilyResult> {
    FamilyResult::evaluate(&HermitianQuotient::new(m, q)?, DEFAULT_CONDUCTOR_CAP)
}

/// ⟨q, q+q₀, q+tq₀, (t−1)q+tq₀+1⟩ with q = tq₀².
pub fn pedersen_sorensen(q0: u64, t: u64) -> Result<FamilyResult> {
    FamilyResult::evaluate(&PedersenSorensen::new(q0, t)?, DEFAULT_CONDUCTOR_CAP)
}

/// ⟨q, q+q₀, q+2q₀, q+2q₀+1⟩ with q = 2q₀², q₀ a power of two.
pub fn suzuki(q0: u64) -> Result<FamilyResult> {
    FamilyResult::evaluate(&Suzuki::new(q0)?, DEFAULT_CONDUCTOR_CAP)
}

/// ⟨q^{r−1}, (q^r − 1)/(q − 1)⟩.
pub fn norm_trace(q: u64, r: u32) -> Result<FamilyResult> {
    FamilyResult::evaluate(&NormTrace::new(q, r)?, DEFAULT_CONDUCTOR_CAP)
}

/// ⟨2, 2g+1⟩.
pub fn hyperelliptic(g: u64) -> Result<FamilyResult> {
    FamilyResult::evaluate(&Hyperelliptic::new(g)?, DEFAULT_CONDUCTOR_CAP)
}

/// Builds a family instance from its CLI name and named parameters.
pub fn from_params(kind: FamilyKind, get: impl Fn(&str) -> Option<u64>) -> Result<alloc::boxed::Box<dyn Family + Send + Sync>> {
    use alloc::boxed::Box;
    let need = |name: &str| {
        get(name).ok_or_else(|| {
            Error::invalid(alloc::format!("{} needs parameter --{name}", kind.name()))
        })
    };
    Ok(match kind {
        FamilyKind::Interval => Box::new(Interval::new(need("m")?, need("h")?)?),
        FamilyKind::Klein => Box::new(Klein::new(need("m")?)?),
        FamilyKind::HermitianQuotient => Box::new(HermitianQuotient::new(need("m")?, need("q")?)?),
        FamilyKind::PedersenSorensen => Box::new(PedersenSorensen::new(need("q0")?, need("t")?)?),
        FamilyKind::Suzuki => Box::new(Suzuki::new(need("q0")?)?),
        FamilyKind::NormTrace => {
            let r = u32::try_from(need("r")?).map_err(|_| Error::Overflow)?;
            Box::new(NormTrace::new(need("q")?, r)?)
        }
        FamilyKind::Hyperelliptic => Box::new(Hyperelliptic::new(need("g")?)?),
    })
}
