//! Serializable report types. JSON is the machine interface, so every σ value
//! crosses it as an exact `{"twice": n, "decimal": "…"}` pair.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clifford_core::families::{FamilyResult, Verification};
use clifford_core::{
    delta, profile, CodeBoundReport, DomainKind, HalfInt, MaCapability, NumericalSemigroup,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfValue {
    pub twice: i128,
    pub decimal: String,
}

impl From<HalfInt> for HalfValue {
    fn from(v: HalfInt) -> Self {
        HalfValue { twice: v.twice(), decimal: v.to_decimal_string() }
    }
}

impl HalfValue {
    pub fn value(&self) -> HalfInt {
        HalfInt::from_twice(self.twice)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectSummary {
    pub defect: HalfValue,
    pub argmax: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaSummary {
    /// |S ∩ [0, c − 1]|; 2σ(a) = Δ(a) − 2·this for members a.
    pub members_below_conductor: u64,
    /// Largest Δ over S ∩ [0, c] and where it is attained.
    pub max: u64,
    pub argmax: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub generators: Vec<u64>,
    pub genus: u64,
    pub frobenius: i64,
    pub conductor: u64,
    pub multiplicity: u64,
    pub embedding_dimension: usize,
    pub apery_set: Vec<u64>,
    pub symmetric: bool,
    pub sparse: bool,
    pub max_embedding_dimension: bool,
    /// Maximum of σ over S ∩ [0, c].
    pub restricted: DefectSummary,
    /// Maximum of σ over [0, c].
    pub duursma: DefectSummary,
    pub delta: DeltaSummary,
}

impl AnalysisReport {
    pub fn new(s: &NumericalSemigroup) -> Self {
        let restricted = profile(s, DomainKind::RestrictedToS);
        let full = profile(s, DomainKind::FullInterval);
        let deltas: Vec<(u64, u64)> = s.members().map(|a| (a, delta(s, a).expect("member lies in [0, c]"))).collect();
        let max = deltas.iter().map(|d| d.1).max().unwrap_or(0);
        AnalysisReport {
            generators: s.generators().to_vec(),
            genus: s.genus(),
            frobenius: s.frobenius(),
            conductor: s.conductor(),
            multiplicity: s.multiplicity(),
            embedding_dimension: s.embedding_dimension(),
            apery_set: s.apery_set(s.multiplicity()).expect("multiplicity is a member"),
            symmetric: s.is_symmetric(),
            sparse: s.is_sparse(),
            max_embedding_dimension: s.has_max_embedding_dimension(),
            restricted: DefectSummary { defect: restricted.max_value.into(), argmax: restricted.argmax },
            duursma: DefectSummary { defect: full.max_value.into(), argmax: full.argmax },
            delta: DeltaSummary {
                members_below_conductor: s.count_between(0, s.conductor() as i64 - 1),
                max,
                argmax: deltas.iter().filter(|d| d.1 == max).map(|d| d.0).collect(),
            },
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let rows: [(&str, String); 13] = [
            ("generators", list(&self.generators)),
            ("genus", self.genus.to_string()),
            ("frobenius", self.frobenius.to_string()),
            ("conductor", self.conductor.to_string()),
            ("multiplicity", self.multiplicity.to_string()),
            ("embedding dimension", self.embedding_dimension.to_string()),
            ("apery set", list(&self.apery_set)),
            ("symmetric", self.symmetric.to_string()),
            ("sparse", self.sparse.to_string()),
            ("max embedding dim", self.max_embedding_dimension.to_string()),
            ("clifford defect", format!("{} at {}", self.restricted.defect.decimal, list(&self.restricted.argmax))),
            ("duursma defect", format!("{} at {}", self.duursma.defect.decimal, list(&self.duursma.argmax))),
            ("max delta", format!("{} at {}", self.delta.max, list(&self.delta.argmax))),
        ];
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<20} {v}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub genus_ok: bool,
    pub argmax_ok: bool,
    pub defect_ok: Option<bool>,
    pub membership_ok: bool,
    pub fast_count_ok: Option<bool>,
    pub oracle_defect: HalfValue,
    pub oracle_argmax: Vec<u64>,
}

impl From<&Verification> for VerificationReport {
    fn from(v: &Verification) -> Self {
        VerificationReport {
            passed: v.passed(),
            genus_ok: v.genus_ok,
            argmax_ok: v.argmax_ok,
            defect_ok: v.defect_ok,
            membership_ok: v.membership_ok,
            fast_count_ok: v.fast_count_ok,
            oracle_defect: v.oracle_defect.into(),
            oracle_argmax: v.oracle_argmax.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    pub generators: Vec<u64>,
    pub genus: u64,
    pub conductor: u64,
    pub argmax: u64,
    pub defect: Option<HalfValue>,
    /// Whether the conductor was small enough to sieve.
    pub materialized: bool,
    pub verification: Option<VerificationReport>,
}

impl FamilyReport {
    pub fn new(r: &FamilyResult, verify: bool) -> Self {
        FamilyReport {
            family: r.kind.name().to_string(),
            params: r.params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            generators: r.generators.clone(),
            genus: r.genus_formula,
            conductor: r.conductor_formula,
            argmax: r.argmax_closed_form,
            defect: r.defect_closed_form.map(Into::into),
            materialized: r.semigroup.is_some(),
            verification: if verify { r.verify().as_ref().map(Into::into) } else { None },
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "{:<12} {} ({})", "family", self.family, params.join(", "));
        let _ = writeln!(out, "{:<12} {}", "generators", list(&self.generators));
        let _ = writeln!(out, "{:<12} {}", "genus", self.genus);
        let _ = writeln!(out, "{:<12} {}", "conductor", self.conductor);
        let _ = writeln!(out, "{:<12} {}", "argmax", self.argmax);
        let defect = self.defect.as_ref().map_or("unknown".to_string(), |d| d.decimal.clone());
        let _ = writeln!(out, "{:<12} {}", "defect", defect);
        if let Some(v) = &self.verification {
            let status = if v.passed { "OK" } else { "MISMATCH" };
            let _ = writeln!(
                out,
                "{:<12} {status} (oracle defect {} at {})",
                "verify:",
                v.oracle_defect.decimal,
                list(&v.oracle_argmax)
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaPoint {
    pub a: u64,
    pub in_s: bool,
    pub delta: u64,
    pub sigma: HalfValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub generators: Vec<u64>,
    pub conductor: u64,
    pub members_below_conductor: u64,
    pub points: Vec<DeltaPoint>,
}

impl DeltaReport {
    pub fn table(&self) -> String {
        let mut out = format!("{:>8} {:>5} {:>10} {:>10}\n", "a", "in S", "delta", "sigma");
        for p in &self.points {
            let _ = writeln!(out, "{:>8} {:>5} {:>10} {:>10}", p.a, p.in_s, p.delta, p.sigma.decimal);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeBoundsReport {
    pub m: u64,
    pub genus: u64,
    pub defect: HalfValue,
    pub rr_bound_raw: i128,
    pub clifford_bound_exact: HalfValue,
    pub clifford_bound_raw: i128,
    pub rr_bound: u64,
    pub clifford_bound: u64,
    pub exact_dimension: u64,
    pub winner: String,
    pub clifford_wins_interval: Option<(u64, u64)>,
    pub ma: Option<MaReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaReport {
    pub d: u64,
    pub errors: u64,
    pub clamped: bool,
}

impl CodeBoundsReport {
    pub fn new(r: &CodeBoundReport, ma: Option<(u64, MaCapability)>) -> Self {
        CodeBoundsReport {
            m: r.m,
            genus: r.genus,
            defect: r.defect.into(),
            rr_bound_raw: r.rr_bound_raw,
            clifford_bound_exact: r.clifford_bound_exact.into(),
            clifford_bound_raw: r.clifford_bound_raw,
            rr_bound: r.rr_bound,
            clifford_bound: r.clifford_bound,
            exact_dimension: r.exact_dimension,
            winner: format!("{:?}", r.winner),
            clifford_wins_interval: r.clifford_wins_interval,
            ma: ma.map(|(d, c)| MaReport { d, errors: c.errors, clamped: c.clamped }),
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<18} {}", "m", self.m);
        let _ = writeln!(out, "{:<18} {}", "genus", self.genus);
        let _ = writeln!(out, "{:<18} {}", "s(Q)", self.defect.decimal);
        let _ = writeln!(out, "{:<18} {} (raw {})", "riemann-roch", self.rr_bound, self.rr_bound_raw);
        let _ = writeln!(out, "{:<18} {} (raw {})", "clifford", self.clifford_bound, self.clifford_bound_raw);
        let _ = writeln!(out, "{:<18} {}", "exact l(m)", self.exact_dimension);
        let _ = writeln!(out, "{:<18} {}", "winner", self.winner);
        if let Some((lo, hi)) = self.clifford_wins_interval {
            let _ = writeln!(out, "{:<18} [{lo}, {hi}]", "clifford wins on");
        }
        if let Some(ma) = &self.ma {
            let note = if ma.clamped { " (clamped)" } else { "" };
            let _ = writeln!(out, "{:<18} {}{note} for d = {}", "MA corrects", ma.errors, ma.d);
        }
        out
    }
}

pub(crate) fn list(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(", "))
}
