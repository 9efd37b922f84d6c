//! Command-line surface: `compute`, `nc`, `verify`, `oracle`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use csmhyp_core::charclasses::{analyze, csm_normal_crossings, euler_characteristic, segre_singular_nc, VerificationRecord};
use csmhyp_core::oracles::{affine_milnor_total, segre_linear_subspace, smooth_chern_class, MilnorCount};
use csmhyp_core::polyalg::{parse_poly, DEFAULT_PRIMES};
use csmhyp_core::segreengine::TrialPolicy;
use csmhyp_core::Error;
use serde::Serialize;

use crate::fixtures::{default_corpus, load_corpus, run_suite, SuiteSummary};
use crate::json::{class_to_strings, report_to_json, FailureJson, TrialJson};
use crate::render::{render_class, render_report};
use crate::{CliError, EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION};

#[derive(Debug, Parser)]
#[command(name = "csmhyp", version, about = "Characteristic classes of projective hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone)]
struct TrialArgs {
    /// Prime for modular arithmetic; repeat to give the escalation order.
    #[arg(long = "prime")]
    primes: Vec<u64>,
    /// Seed for the random linear sections; repeat for several trials.
    #[arg(long = "seed", env = "CSMHYP_SEED", value_delimiter = ',')]
    seeds: Vec<u64>,
    /// Agreeing trials needed to accept the projective degrees.
    #[arg(long, default_value_t = 2)]
    agreement: usize,
    /// Disagreeing or failed trials tolerated before giving up.
    #[arg(long, default_value_t = 4)]
    max_disagreements: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report for V(F) in P^{nvars-1}.
    Compute {
        polynomial: String,
        #[arg(long)]
        nvars: usize,
        #[command(flatten)]
        trials: TrialArgs,
        #[arg(long)]
        json: bool,
        /// Affine chart for the Milnor-number cross-check under --verify.
        #[arg(long)]
        chart: Option<usize>,
        /// Also check against the closed-form and Milnor oracles.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        no_legend: bool,
    },
    /// CSM class of a normal-crossings union of smooth hypersurfaces.
    Nc {
        #[arg(long)]
        n: usize,
        #[arg(required = true)]
        degrees: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Run a fixture corpus (the bundled one by default).
    Verify {
        path: Option<PathBuf>,
        #[command(flatten)]
        trials: TrialArgs,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form and brute-force baselines.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Total Milnor number from the affine Jacobian quotient.
    Milnor {
        polynomial: String,
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        chart: usize,
        #[arg(long = "prime")]
        primes: Vec<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Chern class of a smooth degree-d hypersurface in P^n.
    Smooth {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        json: bool,
    },
    /// Segre class of a linear P^m in P^n.
    Linear {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Everything a run needs besides its inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub policy: TrialPolicy,
    pub format: OutputFormat,
    pub verify: bool,
    pub chart: Option<usize>,
}

impl RunConfig {
    fn new(trials: &TrialArgs, json: bool, verify: bool, chart: Option<usize>) -> Result<Self, CliError> {
        let primes = if trials.primes.is_empty() { DEFAULT_PRIMES.to_vec() } else { trials.primes.clone() };
        let seeds = if trials.seeds.is_empty() { TrialPolicy::default().seeds } else { trials.seeds.clone() };
        if trials.agreement == 0 {
            return Err(CliError::Input("--agreement must be at least 1".into()));
        }
        let policy = TrialPolicy {
            primes,
            seeds,
            agreement: trials.agreement,
            max_disagreements: trials.max_disagreements.max(1),
            ..TrialPolicy::default()
        };
        let format = if json { OutputFormat::Json } else { OutputFormat::Text };
        Ok(RunConfig { policy, format, verify, chart })
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, v: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializes"))
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let json = match &cli.command {
        Command::Compute { json, .. } | Command::Nc { json, .. } | Command::Verify { json, .. } => *json,
        Command::Oracle { which } => match which {
            OracleCommand::Milnor { json, .. } | OracleCommand::Smooth { json, .. } | OracleCommand::Linear { json, .. } => {
                *json
            }
        },
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let code = e.exit_code();
            if json {
                let trials = match &e {
                    CliError::Core(Error::TrialsExhausted { log, .. }) => log.iter().map(TrialJson::from).collect(),
                    _ => Vec::new(),
                };
                let failure = FailureJson { error: e.to_string(), kind: e.kind().into(), exit_code: code, trials };
                let _ = print_json(out, &failure);
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Input(format!("output error: {e}"))
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Compute { polynomial, nvars, trials, json, chart, verify, no_legend } => {
            let config = RunConfig::new(&trials, json, verify, chart)?;
            cmd_compute(&polynomial, nvars, &config, !no_legend, out)
        }
        Command::Nc { n, degrees, json } => cmd_nc(n, &degrees, json, out),
        Command::Verify { path, trials, json } => {
            let config = RunConfig::new(&trials, json, true, None)?;
            cmd_verify(path, &config, out, err)
        }
        Command::Oracle { which } => cmd_oracle(which, out),
    }
}

pub fn cmd_compute(
    polynomial: &str,
    nvars: usize,
    config: &RunConfig,
    legend: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if nvars < 2 {
        return Err(CliError::Input("--nvars must be at least 2".into()));
    }
    let f = parse_poly(polynomial, nvars)?;
    let mut report = analyze(&f, &config.policy)?;
    if config.verify {
        let closed = smooth_chern_class(report.n(), report.d());
        if report.classes.segre_singular.is_zero() {
            let pass = report.classes.csm == closed;
            report.verification.push(VerificationRecord {
                name: "smooth_closed_form".into(),
                pass,
                difference: (!pass).then(|| &report.classes.csm - &closed),
                detail: None,
            });
        }
        if let Some(chart) = config.chart {
            let (pass, detail) = match affine_milnor_total(&f, chart, &config.policy.primes)? {
                MilnorCount::Finite(m) => (m as i64 == report.milnor_total, format!("oracle {m}")),
                MilnorCount::NonIsolated => (false, "singularities are not isolated".into()),
            };
            report.verification.push(VerificationRecord {
                name: "milnor_oracle".into(),
                pass,
                difference: None,
                detail: (!pass).then_some(detail),
            });
        }
    }
    match config.format {
        OutputFormat::Json => writeln!(out, "{}", report_to_json(&report)).map_err(io)?,
        OutputFormat::Text => write!(out, "{}", render_report(&report, polynomial.trim(), legend)).map_err(io)?,
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_VERIFICATION })
}

#[derive(Serialize)]
struct NcJson {
    n: usize,
    degrees: Vec<u32>,
    csm: Vec<String>,
    segre_singular: Vec<String>,
    euler: i64,
}

pub fn cmd_nc(n: usize, degrees: &[u32], json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    if n == 0 {
        return Err(CliError::Input("--n must be at least 1".into()));
    }
    let csm = csm_normal_crossings(n, degrees)?;
    let seg = segre_singular_nc(n, degrees)?;
    let euler = euler_characteristic(&csm)?;
    if json {
        let v = NcJson { n, degrees: degrees.to_vec(), csm: class_to_strings(&csm), segre_singular: class_to_strings(&seg), euler };
        print_json(out, &v).map_err(io)?;
    } else {
        write!(out, "{}{}", render_class("c_SM(X)", &csm), render_class("s(Y)", &seg)).map_err(io)?;
        writeln!(out, "χ(X) = {euler}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<&'a str>,
}

#[derive(Serialize)]
struct FixtureJson<'a> {
    name: &'a str,
    pass: bool,
    checks: Vec<CheckJson<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    passed: bool,
    fixtures: Vec<FixtureJson<'a>>,
}

fn suite_json(s: &SuiteSummary) -> SuiteJson<'_> {
    SuiteJson {
        passed: s.passed(),
        fixtures: s
            .outcomes
            .iter()
            .map(|o| FixtureJson {
                name: &o.name,
                pass: o.passed(),
                checks: o
                    .checks
                    .iter()
                    .map(|c| CheckJson { name: &c.name, pass: c.pass, detail: c.detail.as_deref() })
                    .collect(),
                error: o.error.as_deref(),
            })
            .collect(),
    }
}

pub fn cmd_verify(
    path: Option<PathBuf>,
    config: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let cases = match &path {
        Some(p) => load_corpus(p)?,
        None => default_corpus(),
    };
    if cases.is_empty() {
        writeln!(err, "warning: fixture corpus is empty, nothing to verify").map_err(io)?;
    }
    let summary = run_suite(&cases, &config.policy);
    match config.format {
        OutputFormat::Json => print_json(out, &suite_json(&summary)).map_err(io)?,
        OutputFormat::Text => write!(out, "{}", summary.render()).map_err(io)?,
    }
    Ok(if summary.passed() { EXIT_OK } else { EXIT_VERIFICATION })
}

#[derive(Serialize)]
#[serde(untagged)]
enum MilnorJson {
    Finite { milnor_total: u64 },
    NonIsolated { milnor_total: &'static str },
}

fn cmd_oracle(which: OracleCommand, out: &mut dyn Write) -> Result<i32, CliError> {
    match which {
        OracleCommand::Milnor { polynomial, nvars, chart, primes, json } => {
            let f = parse_poly(&polynomial, nvars)?;
            let primes = if primes.is_empty() { DEFAULT_PRIMES.to_vec() } else { primes };
            let m = affine_milnor_total(&f, chart, &primes)?;
            if json {
                let v = match m {
                    MilnorCount::Finite(k) => MilnorJson::Finite { milnor_total: k },
                    MilnorCount::NonIsolated => MilnorJson::NonIsolated { milnor_total: "non-isolated" },
                };
                print_json(out, &v).map_err(io)?;
            } else {
                match m {
                    MilnorCount::Finite(k) => writeln!(out, "total Milnor number = {k}"),
                    MilnorCount::NonIsolated => writeln!(out, "singularities are not isolated"),
                }
                .map_err(io)?;
            }
        }
        OracleCommand::Smooth { n, d, json } => {
            if n == 0 || d == 0 {
                return Err(CliError::Input("need n >= 1 and d >= 1".into()));
            }
            let c = smooth_chern_class(n, d);
            emit_class(out, "c(TX)", &c, json)?;
        }
        OracleCommand::Linear { n, m, json } => {
            let c = segre_linear_subspace(n, m)?;
            emit_class(out, "s(P^m)", &c, json)?;
        }
    }
    Ok(EXIT_OK)
}

fn emit_class(out: &mut dyn Write, label: &str, c: &csmhyp_core::ChowClass, json: bool) -> Result<(), CliError> {
    if json {
        print_json(out, &class_to_strings(c)).map_err(io)
    } else {
        write!(out, "{}", render_class(label, c)).map_err(io)
    }
}
