//! The `survkit` command line: `estimate`, `verify` and `simulate`.
//!
//! Exit codes: 0 success, 1 an identity check failed, 2 bad input or
//! configuration, 3 an estimator could not be computed.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::data::{build_jump_table, JumpTable};
use crate::error::EstimatorError;
use crate::estimators::{
    ipcw_cdf, ipcw_survival_tilde, naive_survival, product_limit_censoring_dagger,
    product_limit_censoring_naive, product_limit_failure, rttr, self_consistent, DEFAULT_MAX_ITER,
};
use crate::identities::{evaluation_grid, verify_all, VerificationReport, DEFAULT_TOLERANCE};
use crate::io::{read_sample, tabulate, write_sample, write_table, InputError, TableRow};
use crate::simulate::{generate, SimConfig};
use crate::step::StepFunction;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "survkit",
    version,
    about = "Survival estimators for right-censored data with ties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one estimator on a `time,status` CSV file.
    Estimate(EstimateArgs),
    /// Check every estimator identity on a `time,status` CSV file.
    Verify(VerifyArgs),
    /// Draw samples from a JSON simulation config.
    Simulate(SimulateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EstimatorId {
    /// Empirical survival of the observed times.
    Naive,
    /// Product-limit (Kaplan–Meier) survival.
    Pl,
    /// Self-consistent survival.
    Sc,
    /// IPCW distribution function.
    IpcwCdf,
    /// IPCW survival (weighted tail sum).
    IpcwSurv,
    /// Redistribute-to-the-right survival.
    Rttr,
    /// Tie-aware product-limit censoring survival.
    CensorPl,
    /// Product-limit censoring survival with swapped status labels.
    CensorNaive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct EstimateArgs {
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub estimator: EstimatorId,
    /// Comma-separated evaluation points; defaults to 0, every observed
    /// time, and one unit past the last.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub eval_at: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    pub input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, clap::Args)]
pub struct SimulateArgs {
    pub config: PathBuf,
    /// Output prefix; replicate `k` is written to `<out>_r<k>.csv`.
    pub out: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    /// Added to the config seed; replicate `k` uses `seed + offset + k − 1`.
    #[arg(long, default_value_t = 0)]
    pub seed_offset: u64,
    /// Run the identity checks on every replicate and summarize.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }

    fn computation(e: EstimatorError) -> Self {
        Self {
            code: EXIT_COMPUTATION,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e)
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    let result = match &cli.command {
        Command::Estimate(args) => estimate(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Simulate(args) => simulate(args, out),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn load_table(path: &Path) -> Result<JumpTable, Failure> {
    let file = File::open(path)
        .map_err(|e| Failure::input(format!("cannot open {}: {e}", path.display())))?;
    let sample = read_sample(BufReader::new(file))
        .map_err(|e: InputError| Failure::input(format!("{}: {e}", path.display())))?;
    Ok(build_jump_table(&sample))
}

/// The step function the CLI reports for `id`. IPCW estimators are weighted
/// with the tie-aware censoring estimator.
pub fn compute_estimator(jt: &JumpTable, id: EstimatorId) -> Result<StepFunction, EstimatorError> {
    Ok(match id {
        EstimatorId::Naive => naive_survival(jt),
        EstimatorId::Pl => product_limit_failure(jt),
        EstimatorId::Sc => self_consistent(jt, DEFAULT_TOLERANCE, DEFAULT_MAX_ITER)?.estimate,
        EstimatorId::IpcwCdf => ipcw_cdf(jt, &product_limit_censoring_dagger(jt))?,
        EstimatorId::IpcwSurv => ipcw_survival_tilde(jt, &product_limit_censoring_dagger(jt))?,
        EstimatorId::Rttr => rttr(jt).estimate,
        EstimatorId::CensorPl => product_limit_censoring_dagger(jt),
        EstimatorId::CensorNaive => product_limit_censoring_naive(jt),
    })
}

#[derive(Serialize)]
struct EstimateOutput<'a> {
    estimator: &'a str,
    rows: &'a [TableRow],
}

fn estimate(args: &EstimateArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if let Some(points) = &args.eval_at {
        if let Some(bad) = points.iter().find(|t| !(t.is_finite() && **t >= 0.0)) {
            return Err(Failure::input(format!(
                "evaluation points must be finite and nonnegative, got {bad}"
            )));
        }
    }
    let jt = load_table(&args.input)?;
    let f = compute_estimator(&jt, args.estimator).map_err(Failure::computation)?;
    let points = args.eval_at.clone().unwrap_or_else(|| evaluation_grid(&jt));
    let rows = tabulate(&f, &points);
    match args.format {
        OutputFormat::Csv => write_table(&mut *out, &rows)?,
        OutputFormat::Json => {
            let name = args
                .estimator
                .to_possible_value()
                .expect("no skipped variants");
            let body = EstimateOutput {
                estimator: name.get_name(),
                rows: &rows,
            };
            serde_json::to_writer_pretty(&mut *out, &body).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(EXIT_OK)
}

fn check_tolerance(tol: f64) -> Result<(), Failure> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Failure::input(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn write_report(
    report: &VerificationReport,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, report).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *out);
            csv.write_record([
                "name",
                "max_residual",
                "tolerance",
                "passed",
                "condition_holds",
            ])
            .map_err(std::io::Error::from)?;
            for c in &report.checks {
                csv.write_record([
                    c.name.as_str().to_string(),
                    format!("{:e}", c.max_residual),
                    format!("{:e}", c.tolerance),
                    c.passed.to_string(),
                    c.condition_holds.map(|b| b.to_string()).unwrap_or_default(),
                ])
                .map_err(std::io::Error::from)?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    check_tolerance(args.tol)?;
    let jt = load_table(&args.input)?;
    let report = verify_all(&jt, args.tol).map_err(Failure::computation)?;
    write_report(&report, args.format, out)?;
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

/// `<out>_r<k>.csv`, dropping a trailing `.csv` from `out` first.
pub fn replicate_path(out: &Path, k: usize) -> PathBuf {
    let stem = if out.extension().is_some_and(|e| e == "csv") {
        out.with_extension("")
    } else {
        out.to_path_buf()
    };
    let mut name = stem.into_os_string();
    name.push(format!("_r{k}.csv"));
    PathBuf::from(name)
}

fn simulate(args: &SimulateArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if args.reps == 0 {
        return Err(Failure::input("--reps must be at least 1"));
    }
    check_tolerance(args.tol)?;
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", args.config.display())))?;
    let config = SimConfig::from_json(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", args.config.display())))?;

    let mut all_passed = 0;
    let mut with_ties = 0;
    for k in 1..=args.reps {
        let replicate = config.with_seed_offset(args.seed_offset.wrapping_add(k as u64 - 1));
        let sample = generate(&replicate);
        let path = replicate_path(&args.out, k);
        let file = File::create(&path)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
        let mut writer = BufWriter::new(file);
        write_sample(&mut writer, &sample)?;
        writer.flush()?;

        if args.verify {
            let jt = build_jump_table(&sample);
            let report = verify_all(&jt, args.tol).map_err(Failure::computation)?;
            let summary = &report.dataset_summary;
            if report.all_passed() {
                all_passed += 1;
            }
            if summary.common_discontinuity_before_last {
                with_ties += 1;
            }
            writeln!(
                out,
                "r{k} seed={} n={} m={} passed={}/{} common_discontinuity={} last_time_all_failures={}",
                replicate.seed,
                summary.n,
                summary.m,
                report.passed_count(),
                report.checks.len(),
                summary.common_discontinuity_before_last,
                summary.last_time_all_failures,
            )?;
        }
    }

    if args.verify {
        writeln!(
            out,
            "{all_passed}/{} replicates passed every check; {with_ties} with a common discontinuity before the last time",
            args.reps
        )?;
        if all_passed < args.reps {
            return Ok(EXIT_CHECK_FAILED);
        }
    } else {
        writeln!(out, "wrote {} replicate(s)", args.reps)?;
    }
    Ok(EXIT_OK)
}
