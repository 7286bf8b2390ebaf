//! Command-line front end for `clifford-core`.
//!
//! Reports go to stdout as JSON (default) or aligned text; diagnostics and
//! sweep warnings go to stderr. Exit codes are listed in [`error::exit`].

pub mod args;
pub mod error;
pub mod plot;
pub mod report;
pub mod sweep;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::Parser;
use clifford_core::families::{self, FamilyKind, FamilyResult};
use clifford_core::{bound_report, delta, ma_capability, sigma, NumericalSemigroup};
use serde::Serialize;

use args::{Cli, Command, FamilyParams, OutputFormat, PlotFormat};
use error::{exit, CliError, CliResult};
use report::{AnalysisReport, CodeBoundsReport, DeltaPoint, DeltaReport, FamilyReport};

/// Parses `argv`, runs the command and returns the process exit code.
pub fn main_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(cli, stdout, stderr) {
        Ok(()) => exit::OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, format: OutputFormat, value: &T, table: impl FnOnce(&T) -> String) -> CliResult<()> {
    let text = match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Table => table(value),
    };
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

fn family_kind(name: &str) -> CliResult<FamilyKind> {
    FamilyKind::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = FamilyKind::ALL.iter().map(|k| k.name()).collect();
        CliError::Usage(format!("unknown family `{name}` (expected one of {})", known.join(", ")))
    })
}

fn family_result(name: &str, params: &FamilyParams, cap: u64) -> CliResult<FamilyResult> {
    let kind = family_kind(name)?;
    let family = families::from_params(kind, |n| params.get(n))?;
    Ok(FamilyResult::evaluate(family.as_ref(), cap)?)
}

fn semigroup(gens: &[u64], cap: u64) -> CliResult<NumericalSemigroup> {
    Ok(NumericalSemigroup::from_generators_capped(gens, cap)?)
}

pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    let cap = cli.conductor_cap;
    let fmt = |local: Option<OutputFormat>| local.or(cli.format).unwrap_or(OutputFormat::Json);
    match cli.command {
        Command::Analyze { gens, format } => {
            let s = semigroup(&gens, cap)?;
            emit(stdout, fmt(format), &AnalysisReport::new(&s), AnalysisReport::table)
        }
        Command::Family { name, params, verify, format } => {
            let result = family_result(&name, &params, cap)?;
            if verify && result.semigroup.is_none() {
                let _ = writeln!(
                    stderr,
                    "warning: conductor {} above cap {cap}; closed forms not verified",
                    result.conductor_formula
                );
            }
            let report = FamilyReport::new(&result, verify);
            emit(stdout, fmt(format), &report, FamilyReport::table)?;
            match &report.verification {
                Some(v) if !v.passed => Err(CliError::Mismatch(format!(
                    "{name}: closed form disagrees with the oracle"
                ))),
                _ => Ok(()),
            }
        }
        Command::Sweep { name, ranges, jobs, corrupt_closed_form, format } => {
            let kind = family_kind(&name)?;
            let summary = sweep::run(kind, &ranges, cap, jobs, corrupt_closed_form)?;
            for e in summary.exceptions.iter().filter(|e| e.status == sweep::Status::Skipped) {
                let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(stderr, "warning: skipped {name} {}: {}", params.join(" "), e.detail);
            }
            emit(stdout, fmt(format), &summary, sweep::SweepSummary::table)?;
            if summary.failed > 0 {
                return Err(CliError::Mismatch(format!("{} of {} instances", summary.failed, summary.instances)));
            }
            Ok(())
        }
        Command::Delta { gens, a, format } => {
            let s = semigroup(&gens, cap)?;
            let points = match a {
                Some(a) => vec![a],
                None => (0..=s.conductor()).collect(),
            };
            let points = points
                .into_iter()
                .map(|a| {
                    Ok(DeltaPoint {
                        a,
                        in_s: s.contains(a as i64),
                        delta: delta(&s, a)?,
                        sigma: sigma(&s, a)?.into(),
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            let report = DeltaReport {
                generators: s.generators().to_vec(),
                conductor: s.conductor(),
                members_below_conductor: s.count_between(0, s.conductor() as i64 - 1),
                points,
            };
            emit(stdout, fmt(format), &report, DeltaReport::table)
        }
        Command::CodeBounds { gens, m, d, format } => {
            let s = semigroup(&gens, cap)?;
            let ma = d.map(|d| ma_capability(&s, d).map(|c| (d, c))).transpose()?;
            let report = CodeBoundsReport::new(&bound_report(&s, m), ma);
            emit(stdout, fmt(format), &report, CodeBoundsReport::table)
        }
        Command::Plot { gens, family, params, format, out } => {
            let s = match (&family, gens.is_empty()) {
                (Some(name), _) => family_result(name, &params, cap)?
                    .semigroup
                    .ok_or_else(|| CliError::Usage(format!("conductor above cap {cap}; nothing to plot")))?,
                (None, false) => semigroup(&gens, cap)?,
                (None, true) => return Err(CliError::Usage("plot needs generators or --family".into())),
            };
            match out {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| CliError::io(&path, e))?;
                    let mut w = BufWriter::new(file);
                    write_plot(&s, format, &mut w, &path)?;
                    w.flush().map_err(|e| CliError::io(&path, e))
                }
                None => write_plot(&s, format, stdout, Path::new("<stdout>")),
            }
        }
    }
}

fn write_plot(s: &NumericalSemigroup, format: PlotFormat, w: &mut dyn Write, path: &Path) -> CliResult<()> {
    match format {
        PlotFormat::Csv => plot::write_csv(s, w),
        PlotFormat::Svg => w.write_all(plot::render_svg(s).as_bytes()).map_err(|e| CliError::io(path, e)),
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    main_with(std::env::args_os(), &mut out, &mut err)
}
