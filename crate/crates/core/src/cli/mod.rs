//! The `qperm` command line.
//!
//! Every subcommand produces a [`RunReport`]. Text goes to standard output;
//! `--format json` prints the structured report instead, `--out FILE` writes
//! it to a file, and when `QPERM_REPORT_DIR` is set (and `--out` is not) it
//! is written to `$QPERM_REPORT_DIR/<subcommand>[-n<N>].json`.
//!
//! Exit codes: 0 verified, 1 refuted, 2 inconclusive, 64 usage error.

mod commands;
mod render;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::gradings::{Classification, OrbitReport};
use crate::report::{CertificateReport, Verdict};

pub use commands::PresentationSummary;

pub const EXIT_USAGE: i32 = 64;
pub const REPORT_DIR_ENV: &str = "QPERM_REPORT_DIR";

#[derive(Debug, Parser)]
#[command(name = "qperm", version, about = "Exact verifiers for quantum permutation algebras and gradings of K^n")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output on standard output.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the structured report to FILE.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Omit the wall time from reports, making them byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Relations of the magic (or semi-magic) presentation, optionally completed.
    Present {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        semi: bool,
        /// Run completion and report the quotient's filtration.
        #[arg(long)]
        complete: bool,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Well-definedness of Δ, ε, S, coassociativity, counit, antipode and S².
    VerifyHopf {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long)]
        semi: bool,
    },
    /// x·x^t = I or x^t·x = I from three of the four relation families.
    #[command(name = "three-families", visible_alias = "lemma36")]
    ThreeFamilies {
        #[arg(long)]
        n: usize,
        /// Three of row-orth, row-sum, col-orth, col-sum.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<String>,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// x^t·x = diag(u_1, …, u_n) with u_i the column sums, over the semi-magic presentation.
    #[command(name = "column-sums", visible_alias = "lemma37")]
    ColumnSums {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// The map onto functions on S_n: relations, or the images of polynomials in FILE.
    PiN {
        #[arg(long)]
        n: usize,
        /// One polynomial in the generators u11, …, unn per line.
        #[arg(long)]
        poly: Option<PathBuf>,
    },
    /// Whether the map onto functions on S_n is an isomorphism.
    IsoCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// The two-idempotent block matrix: noncommutativity and linear growth.
    Wang {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Gradings of K^n: ergodic groups and free-product gradings per partition.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ergodic_only: bool,
    },
    /// Builds the blockwise character grading for the given blocks and groups.
    Grade {
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        groups: Vec<String>,
        /// Also write the grading in file format.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Blocks of K^n cut out by the degree-one component of a grading file.
    OrbitDecompose {
        #[arg(long)]
        input: PathBuf,
    },
    /// Grading law, faithfulness and ergodicity of a grading file.
    VerifyGrading {
        #[arg(long)]
        input: PathBuf,
    },
    /// Completes a presentation file and reports its rules.
    Complete {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Present { .. } => "present",
            Command::VerifyHopf { .. } => "verify-hopf",
            Command::ThreeFamilies { .. } => "three-families",
            Command::ColumnSums { .. } => "column-sums",
            Command::PiN { .. } => "pi-n",
            Command::IsoCheck { .. } => "iso-check",
            Command::Wang { .. } => "wang",
            Command::Classify { .. } => "classify",
            Command::Grade { .. } => "grade",
            Command::OrbitDecompose { .. } => "orbit-decompose",
            Command::VerifyGrading { .. } => "verify-grading",
            Command::Complete { .. } => "complete",
        }
    }

    fn n(&self) -> Option<usize> {
        match self {
            Command::Present { n, .. }
            | Command::VerifyHopf { n, .. }
            | Command::ThreeFamilies { n, .. }
            | Command::ColumnSums { n, .. }
            | Command::PiN { n, .. }
            | Command::IsoCheck { n, .. }
            | Command::Wang { n, .. }
            | Command::Classify { n, .. } => Some(*n),
            _ => None,
        }
    }
}

/// One entry of [`RunReport::reports`].
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubReport {
    Certificate(CertificateReport),
    Orbit(OrbitReport),
    Classification(Classification),
    Presentation(PresentationSummary),
}

impl SubReport {
    pub fn verdict(&self) -> Verdict {
        match self {
            SubReport::Certificate(c) => c.verdict,
            SubReport::Orbit(o) => Verdict::combine(o.blocks.iter().map(|b| b.verdict)),
            SubReport::Classification(c) => c.verdict,
            SubReport::Presentation(p) => p.verdict,
        }
    }
}

/// The structured output shared by all subcommands.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub config: BTreeMap<String, Value>,
    pub reports: Vec<SubReport>,
    pub verdict: Verdict,
    pub wall_time_ms: Option<u64>,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// A failure before any verdict: bad flags, unreadable input, cost guards.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

impl UsageError {
    fn from(e: impl std::fmt::Display) -> Self {
        UsageError(e.to_string())
    }
}

/// Runs a parsed command and assembles its report (without timing).
pub fn execute(command: &Command) -> Result<RunReport, UsageError> {
    let (config, reports) = commands::dispatch(command)?;
    let verdict = Verdict::combine(reports.iter().map(SubReport::verdict));
    Ok(RunReport { command: Vec::new(), config, reports, verdict, wall_time_ms: None })
}

/// Parses `argv` (including the program name), runs it and writes output.
/// Returns the process exit code.
pub fn run<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let start = Instant::now();
    let mut report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "qperm {}: {e}", cli.command.name());
            return EXIT_USAGE;
        }
    };
    report.command = argv.iter().skip(1).cloned().collect();
    if !cli.output.no_timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    let json = report.to_json();
    let target = cli.output.out.clone().or_else(|| {
        std::env::var_os(REPORT_DIR_ENV).map(|dir| {
            let name = match cli.command.n() {
                Some(n) => format!("{}-n{n}.json", cli.command.name()),
                None => format!("{}.json", cli.command.name()),
            };
            PathBuf::from(dir).join(name)
        })
    });
    if let Some(path) = target {
        if let Err(e) = std::fs::write(&path, &json) {
            let _ = writeln!(stderr, "qperm: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    let _ = match cli.output.format {
        Format::Json => stdout.write_all(json.as_bytes()),
        Format::Text => stdout.write_all(render::text(&report).as_bytes()),
    };
    report.exit_code()
}
