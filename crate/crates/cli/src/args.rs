use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clifford_core::DEFAULT_CONDUCTOR_CAP;

#[derive(Debug, Parser)]
#[command(name = "clifford", version, about = "Clifford defect of numerical semigroups")]
pub struct Cli {
    /// Output format for reports
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,

    /// Largest conductor for which a semigroup is sieved
    #[arg(long, global = true, default_value_t = DEFAULT_CONDUCTOR_CAP)]
    pub conductor_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Svg,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, Apéry set and both Clifford defects of ⟨gens⟩
    Analyze {
        #[arg(required = true)]
        gens: Vec<u64>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Closed-form results for a named family, optionally checked against the oracle
    Family {
        name: String,
        #[command(flatten)]
        params: FamilyParams,
        /// Compare with exhaustive evaluation; exits 3 on disagreement
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Verify closed forms over a parameter grid
    Sweep {
        name: String,
        #[command(flatten)]
        ranges: SweepRanges,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Test hook: perturb every closed-form value before comparing
        #[arg(long, hide = true)]
        corrupt_closed_form: bool,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Δ(a) = a + 2|S ∩ [a, c−1]| on [0, c], or at a single point
    Delta {
        #[arg(required = true)]
        gens: Vec<u64>,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Riemann-Roch and Clifford lower bounds on l(mQ)
    CodeBounds {
        #[arg(required = true)]
        gens: Vec<u64>,
        #[arg(long)]
        m: u64,
        /// Minimum distance, for the Modified Algorithm's capability
        #[arg(long)]
        d: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Staircase plot (SVG) or per-point table (CSV) of σ
    Plot {
        gens: Vec<u64>,
        /// Plot a family instance instead of explicit generators
        #[arg(long, conflicts_with = "gens")]
        family: Option<String>,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, value_enum, default_value_t = PlotFormat::Svg)]
        format: PlotFormat,
        /// Output file (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, Default, Args)]
pub struct FamilyParams {
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub h: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub q0: Option<u64>,
    #[arg(long)]
    pub t: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub g: Option<u64>,
}

impl FamilyParams {
    pub fn get(&self, name: &str) -> Option<u64> {
        match name {
            "m" => self.m,
            "h" => self.h,
            "q" => self.q,
            "q0" => self.q0,
            "t" => self.t,
            "r" => self.r,
            "g" => self.g,
            _ => None,
        }
    }
}

/// Range expressions such as `2..40`, `1..m-1` or `2,4,8`.
#[derive(Clone, Debug, Default, Args)]
pub struct SweepRanges {
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub q0: Option<String>,
    #[arg(long)]
    pub t: Option<String>,
    #[arg(long)]
    pub r: Option<String>,
    #[arg(long)]
    pub g: Option<String>,
}

impl SweepRanges {
    pub fn get(&self, name: &str) -> Option<&str> {
        match name {
            "m" => self.m.as_deref(),
            "h" => self.h.as_deref(),
            "q" => self.q.as_deref(),
            "q0" => self.q0.as_deref(),
            "t" => self.t.as_deref(),
            "r" => self.r.as_deref(),
            "g" => self.g.as_deref(),
            _ => None,
        }
    }
}
