//! Command-line front end for `nchilb-core`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nchilb_core::motives::{self, Caps, MotiveKind, TableRequest};
use nchilb_core::steinberg::{self, AuditMode};
use nchilb_core::trees;

pub mod config;
pub mod format;
pub mod verify;

use config::{parse_routes, RunConfig};
use format::Format;
use verify::Suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(nchilb_core::Error),
    #[error("{0}")]
    Core(nchilb_core::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<nchilb_core::Error> for CliError {
    fn from(e: nchilb_core::Error) -> Self {
        match e {
            nchilb_core::Error::CapExceeded { .. } => CliError::Cap(e),
            _ => CliError::Core(e),
        }
    }
}

impl CliError {
    /// 1 when a computed class failed certification, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(nchilb_core::Error::Certification(_)) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "nchilb", version, about = "Motives of noncommutative Hilbert schemes")]
struct Cli {
    /// Refuse tree enumerations larger than this.
    #[arg(long, global = true, env = "NCHILB_MAX_TREES", default_value_t = trees::DEFAULT_MAX_TREES,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_trees: u64,
    /// Refuse permutation enumerations larger than this.
    #[arg(long, global = true, env = "NCHILB_MAX_PERMS", default_value_t = steinberg::DEFAULT_MAX_PERMUTATIONS,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_perms: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate motives for d = 0..=dmax.
    Motives(MotivesArgs),
    /// Enumerate m-ary trees or print their cell census.
    Trees {
        #[command(subcommand)]
        command: TreesCommand,
    },
    /// Stratum dimensions of the Steinberg-type variety.
    Steinberg {
        #[command(subcommand)]
        command: SteinbergCommand,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Full,
    Punctual,
    Resolution,
    Ih,
    Nilcone,
    All,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MotivesArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_value = "punctual")]
    kind: Vec<KindArg>,
    /// Number of noncommuting variables.
    #[arg(long)]
    m: u32,
    /// Largest codimension d.
    #[arg(long)]
    dmax: usize,
    /// `all` or a comma-separated list of route labels.
    #[arg(long, value_delimiter = ',')]
    routes: Vec<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Subcommand)]
enum TreesCommand {
    /// List every tree with d nodes.
    Enumerate(TreesArgs),
    /// One row per tree: cell dimensions and linear extensions.
    Census(TreesArgs),
}

#[derive(Debug, Args)]
struct TreesArgs {
    /// Number of noncommuting variables.
    #[arg(long)]
    m: u32,
    /// Codimension.
    #[arg(long)]
    d: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Subcommand)]
enum SteinbergCommand {
    /// Smallness audit over all permutations of {1..d}.
    Audit(AuditArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Grouped,
    Exhaustive,
}

#[derive(Debug, Args)]
struct AuditArgs {
    /// Number of noncommuting variables.
    #[arg(long)]
    m: u32,
    /// Codimension.
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Grouped)]
    mode: ModeArg,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    suite: Vec<Suite>,
    /// Number of noncommuting variables.
    #[arg(long)]
    m: u32,
    /// Largest codimension d.
    #[arg(long)]
    dmax: usize,
    /// Seed for randomized sampling inside the suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: Output,
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code: 0 on success, 1 on a verification failure, 2 on usage
/// or cap errors.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
                return 0;
            }
            let _ = err.write_all(text.as_bytes());
            return 2;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn config(m: u32, dmax: usize, output: &Output, cli: &Cli) -> RunConfig {
    RunConfig {
        m,
        dmax,
        routes: None,
        format: output.format,
        output: output.output.clone(),
        caps: Caps {
            max_trees: cli.max_trees,
            max_permutations: cli.max_perms,
        },
        seed: 0,
    }
}

fn emit(cfg: &RunConfig, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match &cfg.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn unsupported(cfg: &RunConfig, what: &str) -> CliError {
    CliError::Usage(format!("{what} has no {:?} output", cfg.format).to_lowercase())
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Motives(a) => {
            let mut cfg = config(a.m, a.dmax, &a.output, &cli);
            cfg.routes = parse_routes(&a.routes)?;
            cfg.validate()?;
            let kinds: Vec<MotiveKind> = if a.kind.contains(&KindArg::All) {
                MotiveKind::ALL.to_vec()
            } else {
                let mut k: Vec<MotiveKind> = a
                    .kind
                    .iter()
                    .map(|k| match k {
                        KindArg::Full => MotiveKind::Full,
                        KindArg::Punctual => MotiveKind::Punctual,
                        KindArg::Resolution => MotiveKind::Resolution,
                        KindArg::Ih => MotiveKind::Ih,
                        KindArg::Nilcone => MotiveKind::Nilcone,
                        KindArg::All => unreachable!("handled above"),
                    })
                    .collect();
                k.sort();
                k.dedup();
                k
            };
            if let Some(routes) = &cfg.routes {
                for kind in &kinds {
                    if !kind.routes().iter().any(|r| routes.contains(r)) {
                        return Err(CliError::Usage(format!("none of the requested routes computes {kind} motives")));
                    }
                }
            }
            let req = TableRequest {
                m: cfg.m,
                dmax: cfg.dmax,
                kinds,
                routes: cfg.routes.clone(),
            };
            let table = motives::build_table(&req, &cfg.caps)?;
            emit(&cfg, &format::emit_table(&table, cfg.format), out)?;
            let conflicts = table.conflicts();
            for c in &conflicts {
                writeln!(err, "route conflict: {c}")?;
            }
            Ok(if conflicts.is_empty() { 0 } else { 1 })
        }
        Command::Trees { command } => {
            let (a, census) = match command {
                TreesCommand::Enumerate(a) => (a, false),
                TreesCommand::Census(a) => (a, true),
            };
            let cfg = config(a.m, a.d, &a.output, &cli);
            cfg.validate()?;
            let text = if census {
                let rows = trees::census(cfg.m, cfg.dmax, cfg.caps.max_trees)?;
                match cfg.format {
                    Format::Csv => format::census_to_csv(cfg.m, cfg.dmax, &rows),
                    Format::Json => format::census_to_json(cfg.m, cfg.dmax, &rows),
                    Format::Text => format::census_to_text(&rows),
                }
            } else {
                let all = trees::enumerate_trees(cfg.m, cfg.dmax, cfg.caps.max_trees)?;
                match cfg.format {
                    Format::Json => format::trees_to_json(cfg.m, cfg.dmax, &all),
                    Format::Text => format::trees_to_text(&all),
                    Format::Csv => return Err(unsupported(&cfg, "trees enumerate")),
                }
            };
            emit(&cfg, &text, out)?;
            Ok(0)
        }
        Command::Steinberg {
            command: SteinbergCommand::Audit(a),
        } => {
            let cfg = config(a.m, a.d, &a.output, &cli);
            cfg.validate()?;
            let mode = match a.mode {
                ModeArg::Grouped => AuditMode::Grouped,
                ModeArg::Exhaustive => AuditMode::Exhaustive,
            };
            let report = steinberg::smallness_audit(cfg.m, cfg.dmax, mode, cfg.caps.max_permutations)?;
            let text = match cfg.format {
                Format::Json => format::audit_to_json(&report),
                Format::Text => format::audit_to_text(&report),
                Format::Csv => return Err(unsupported(&cfg, "steinberg audit")),
            };
            emit(&cfg, &text, out)?;
            Ok(0)
        }
        Command::Verify(a) => {
            let mut cfg = config(a.m, a.dmax, &a.output, &cli);
            cfg.seed = a.seed;
            cfg.validate()?;
            let params = verify::Params {
                m: cfg.m,
                dmax: cfg.dmax,
                caps: cfg.caps,
                seed: cfg.seed,
            };
            let report = verify::run_suites(&a.suite, &params)?;
            let text = match cfg.format {
                Format::Text => {
                    let mut s: String = report.outcomes.iter().map(|o| format!("{o}\n")).collect();
                    let failed = report.failures().count();
                    s += &format!("{} checks, {failed} failed\n", report.outcomes.len());
                    s
                }
                Format::Json => verify_to_json(&report),
                Format::Csv => return Err(unsupported(&cfg, "verify")),
            };
            emit(&cfg, &text, out)?;
            for f in report.failures() {
                writeln!(err, "{f}")?;
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

fn verify_to_json(report: &verify::Report) -> String {
    let checks: Vec<_> = report
        .outcomes
        .iter()
        .map(|o| {
            serde_json::json!({
                "suite": o.suite.as_str(),
                "m": o.m,
                "d": o.d,
                "check": o.label,
                "passed": o.passed(),
                "failure": o.failure,
            })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&serde_json::json!({
        "passed": report.all_passed(),
        "checks": checks,
    }))
    .expect("serializable");
    s.push('\n');
    s
}
