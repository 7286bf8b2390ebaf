//! Closed-form versus oracle verification over parameter grids.
//!
//! Grids are written per parameter as comma-separated items, each a single
//! value or an inclusive range `lo..hi`. Bounds may refer to parameters bound
//! earlier in the family's order, e.g. `--h 1..m-1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clifford_core::families::{self, FamilyKind, FamilyResult, HermitianQuotient};
use clifford_core::HalfInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::args::SweepRanges;
use crate::error::{CliError, CliResult};
use crate::report::HalfValue;

/// Parameters in binding order, with the default range used when one is
/// omitted (`None` = required).
fn schema(kind: FamilyKind) -> &'static [(&'static str, Option<&'static str>)] {
    match kind {
        FamilyKind::Interval => &[("m", None), ("h", Some("1..m-1"))],
        FamilyKind::Klein => &[("m", None)],
        FamilyKind::HermitianQuotient => &[("q", None), ("m", Some(""))],
        FamilyKind::PedersenSorensen => &[("q0", None), ("t", None)],
        FamilyKind::Suzuki => &[("q0", None)],
        FamilyKind::NormTrace => &[("q", None), ("r", None)],
        FamilyKind::Hyperelliptic => &[("g", None)],
    }
}

fn eval_bound(expr: &str, env: &BTreeMap<&str, u64>) -> CliResult<u64> {
    let bad = || CliError::Usage(format!("cannot evaluate range bound `{expr}`"));
    let expr = expr.trim();
    let split = expr.rfind(['+', '-']).filter(|&i| i > 0);
    let (head, offset) = match split {
        Some(i) => {
            let n: i64 = expr[i + 1..].trim().parse().map_err(|_| bad())?;
            (&expr[..i], if &expr[i..=i] == "-" { -n } else { n })
        }
        None => (expr, 0),
    };
    let head = head.trim();
    let base = match head.parse::<u64>() {
        Ok(v) => v,
        Err(_) => *env.get(head).ok_or_else(bad)?,
    };
    let v = base as i64 + offset;
    u64::try_from(v).map_err(|_| bad())
}

/// Expands a range expression to its values, ascending and without repeats.
pub fn expand(spec: &str, env: &BTreeMap<&str, u64>) -> CliResult<Vec<u64>> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (eval_bound(lo, env)?, eval_bound(hi, env)?);
                out.extend(lo..=hi);
            }
            None => out.push(eval_bound(item, env)?),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Every parameter assignment of the grid, in canonical order.
pub fn grid(kind: FamilyKind, ranges: &SweepRanges) -> CliResult<Vec<BTreeMap<&'static str, u64>>> {
    let schema = schema(kind);
    for name in ["m", "h", "q", "q0", "t", "r", "g"] {
        if ranges.get(name).is_some() && !schema.iter().any(|(n, _)| *n == name) {
            return Err(CliError::Usage(format!("{kind} takes no parameter --{name}")));
        }
    }
    let mut partial: Vec<BTreeMap<&'static str, u64>> = vec![BTreeMap::new()];
    for &(name, default) in schema {
        let mut next = Vec::new();
        for env in &partial {
            let values = match (ranges.get(name), default) {
                (Some(spec), _) => expand(spec, env)?,
                (None, Some("")) => HermitianQuotient::valid_m(env["q"]),
                (None, Some(spec)) => expand(spec, env)?,
                (None, None) => return Err(CliError::Usage(format!("sweep {kind} needs --{name}"))),
            };
            for v in values {
                let mut e = env.clone();
                e.insert(name, v);
                next.push(e);
            }
        }
        partial = next;
    }
    let key = |e: &BTreeMap<&str, u64>| schema.iter().map(|(n, _)| e[n]).collect::<Vec<u64>>();
    partial.sort_by_key(key);
    Ok(partial)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Failed,
    /// Conductor above the cap.
    Skipped,
    /// Parameters outside the family's domain.
    Rejected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub params: BTreeMap<String, u64>,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub family: String,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub rejected: usize,
    /// Every instance that did not pass, in canonical order.
    pub exceptions: Vec<InstanceOutcome>,
}

impl SweepSummary {
    pub fn table(&self) -> String {
        let mut out = format!(
            "{}: {} instances, {} passed, {} failed, {} skipped, {} rejected\n",
            self.family, self.instances, self.passed, self.failed, self.skipped, self.rejected
        );
        for e in &self.exceptions {
            let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "  {:?} {}: {}", e.status, params.join(" "), e.detail);
        }
        out
    }
}

fn describe(r: &FamilyResult, defect: Option<HalfInt>, argmax: u64) -> String {
    let v = r.verify().expect("materialized");
    let shown = defect.map_or("none".into(), |d| HalfValue::from(d).decimal);
    format!(
        "closed form {shown} at {argmax}; oracle {} at {:?}",
        HalfValue::from(v.oracle_defect).decimal,
        v.oracle_argmax
    )
}

fn run_instance(kind: FamilyKind, params: &BTreeMap<&'static str, u64>, cap: u64, corrupt: bool) -> InstanceOutcome {
    let outcome = |status, detail: String| InstanceOutcome {
        params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        status,
        detail,
    };
    let family = match families::from_params(kind, |n| params.get(n).copied()) {
        Ok(f) => f,
        Err(e) => return outcome(Status::Rejected, e.to_string()),
    };
    let mut result = match FamilyResult::evaluate(family.as_ref(), cap) {
        Ok(r) => r,
        Err(e) => return outcome(Status::Rejected, e.to_string()),
    };
    if result.semigroup.is_none() {
        return outcome(Status::Skipped, format!("conductor {} above cap {cap}", result.conductor_formula));
    }
    if corrupt {
        match &mut result.defect_closed_form {
            Some(d) => *d = *d + HalfInt::ONE,
            None => result.argmax_closed_form += 1,
        }
    }
    let v = result.verify().expect("materialized");
    let detail = describe(&result, result.defect_closed_form, result.argmax_closed_form);
    if v.passed() {
        outcome(Status::Passed, detail)
    } else {
        outcome(Status::Failed, detail)
    }
}

pub fn run(kind: FamilyKind, ranges: &SweepRanges, cap: u64, jobs: usize, corrupt: bool) -> CliResult<SweepSummary> {
    let grid = grid(kind, ranges)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let outcomes: Vec<InstanceOutcome> =
        pool.install(|| grid.par_iter().map(|p| run_instance(kind, p, cap, corrupt)).collect());
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    Ok(SweepSummary {
        family: kind.name().to_string(),
        instances: outcomes.len(),
        passed: count(Status::Passed),
        failed: count(Status::Failed),
        skipped: count(Status::Skipped),
        rejected: count(Status::Rejected),
        exceptions: outcomes.into_iter().filter(|o| o.status != Status::Passed).collect(),
    })
}
