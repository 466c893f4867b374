//! Command-line front end. Kept as a library module so the binary stays a
//! one-liner and the commands can be exercised in-process by tests.
//!
//! Exit codes: `0` success, `1` input error (unparsable file or flags),
//! `2` inconclusive or failed checks. Every command is deterministic
//! given its inputs and flags.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::conjecture::{
    run_experiment, ExperimentOptions, DEFAULT_TERM_BUDGET,
};
use crate::druzkowski::{default_pool, example_family, DruzkowskiMap, GeneratorConfig};
use crate::error::Error;
use crate::identities::check_all;
use crate::inversion::{invert_with, verify_inverse, InversionStatus, InvertOptions};
use crate::rational::{parse_rational, Rational};

#[derive(Parser)]
#[command(name = "keller", version, about = "Exact toolkit for cubic-linear polynomial maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invert the map defined by a coefficient matrix file
    Invert {
        matrix_file: PathBuf,
        /// Iteration cap (default: (3^(d-1)+1)/2)
        #[arg(long, value_name = "N")]
        max_iter: Option<usize>,
        /// Also print the step-by-step trace
        #[arg(long)]
        trace: bool,
    },
    /// Print the nilpotency index of JH, or NOT_NILPOTENT
    Nilpotency { matrix_file: PathBuf },
    /// Check the nilpotency identities (exit 0 only if all pass)
    Identities { matrix_file: PathBuf },
    /// Run a seeded experiment against the step-count conjecture
    Conjecture {
        #[arg(long)]
        dim: usize,
        /// Level count for the generator (bounds the nilpotency index)
        #[arg(long)]
        g: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Fill probability for allowed matrix positions, e.g. 1/2
        #[arg(long, default_value = "1/2")]
        density: String,
        /// Max stored terms per polynomial before a trial turns inconclusive
        #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
        budget: usize,
        /// Report file; counterexample matrices are dumped next to it
        #[arg(long, default_value = "conjecture_report.txt")]
        out: PathBuf,
    },
    /// Write the coefficient matrix of the five-variable degree-9 family
    Example {
        /// a2,a3,a4,a5,b3,b4,b5 as rationals
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        params: Vec<String>,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs the CLI on `args` (without the binary name) and returns the exit
/// code, writing to the supplied streams.
pub fn run<W: Write, E: Write>(
    args: impl IntoIterator<Item = String>,
    out: &mut W,
    err: &mut E,
) -> i32 {
    let full_args = std::iter::once("keller".to_string()).chain(args);
    let cli = match Cli::try_parse_from(full_args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successful outputs, not input errors
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch<W: Write, E: Write>(command: Command, out: &mut W, err: &mut E) -> Result<i32, Error> {
    match command {
        Command::Invert {
            matrix_file,
            max_iter,
            trace,
        } => cmd_invert(&matrix_file, max_iter, trace, out),
        Command::Nilpotency { matrix_file } => {
            let map = DruzkowskiMap::read_matrix_file(&matrix_file)?;
            let d = map.dimension().max(1);
            let index = map.cubic_part().jacobian().nilpotency_index(d);
            writeln!(out, "{index}").ok();
            Ok(0)
        }
        Command::Identities { matrix_file } => {
            let map = DruzkowskiMap::read_matrix_file(&matrix_file)?;
            let report = check_all(&map);
            write!(out, "{report}").ok();
            Ok(if report.all_passed() { 0 } else { 2 })
        }
        Command::Conjecture {
            dim,
            g,
            trials,
            seed,
            density,
            budget,
            out: report_path,
        } => cmd_conjecture(dim, g, trials, seed, &density, budget, &report_path, out),
        Command::Example { params, out: path } => cmd_example(&params, path.as_deref(), out, err),
    }
}

fn cmd_invert<W: Write>(
    matrix_file: &Path,
    max_iter: Option<usize>,
    trace: bool,
    out: &mut W,
) -> Result<i32, Error> {
    let map = DruzkowskiMap::read_matrix_file(matrix_file)?;
    let result = invert_with(
        map.map(),
        InvertOptions {
            cap: max_iter,
            term_budget: None,
        },
    )?;
    match result.status {
        InversionStatus::Inverted => {
            let inverse = result.inverse.as_ref().expect("inverted result carries G");
            assert!(
                verify_inverse(map.map(), inverse),
                "internal gate: computed inverse failed composition check"
            );
            for (i, g) in inverse.components().iter().enumerate() {
                writeln!(out, "G{} = {}", i + 1, g.to_string_with_var('Y')).ok();
            }
            let m: Vec<String> = (0..map.dimension())
                .map(|i| {
                    result
                        .trace
                        .termination_index(i)
                        .expect("all coordinates resolved")
                        .to_string()
                })
                .collect();
            writeln!(out, "m = [{}]", m.join(", ")).ok();
            writeln!(out, "deg G = {}", inverse.degree()).ok();
            if trace {
                write!(out, "{}", result.trace.to_report()).ok();
            }
            Ok(0)
        }
        InversionStatus::Inconclusive => {
            writeln!(out, "INCONCLUSIVE after {} iterations", result.trace.cap).ok();
            if result.trace.provably_not_invertible {
                writeln!(
                    out,
                    "the default cap encodes the inverse degree bound: no polynomial inverse exists"
                )
                .ok();
            }
            write!(out, "{}", result.trace.to_report()).ok();
            Ok(2)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_conjecture<W: Write>(
    dim: usize,
    g: usize,
    trials: usize,
    seed: u64,
    density: &str,
    budget: usize,
    report_path: &Path,
    out: &mut W,
) -> Result<i32, Error> {
    if trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".to_string()));
    }
    let density = parse_rational(density).map_err(|message| Error::Parse {
        line: 0,
        field: None,
        message,
    })?;
    let config = GeneratorConfig::new(dim, g, seed, density, default_pool())?;
    let report = run_experiment(
        &config,
        ExperimentOptions {
            trials,
            term_budget: budget,
            cap_override: None,
        },
    );

    std::fs::write(report_path, report.to_report_text())
        .map_err(|e| Error::io(report_path.display().to_string(), e))?;
    for (index, record) in report.counterexamples() {
        let matrix = record.matrix.clone().expect("counterexamples keep their matrix");
        let reproducer = DruzkowskiMap::from_matrix(matrix)?;
        let path = counterexample_path(report_path, index);
        reproducer.write_matrix_file(&path)?;
        writeln!(out, "counterexample reproducer written: {}", path.display()).ok();
    }
    writeln!(out, "report written: {}", report_path.display()).ok();
    writeln!(out, "{}", report.summary_line()).ok();
    let (_, _, inconclusive) = report.counts();
    Ok(if inconclusive > 0 { 2 } else { 0 })
}

/// `report.txt` -> `report_counterexample_3.mat`, next to the report.
pub fn counterexample_path(report_path: &Path, trial_index: usize) -> PathBuf {
    let stem = report_path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "report".to_string());
    report_path.with_file_name(format!("{stem}_counterexample_{trial_index}.mat"))
}

fn cmd_example<W: Write, E: Write>(
    params: &[String],
    out_path: Option<&Path>,
    out: &mut W,
    _err: &mut E,
) -> Result<i32, Error> {
    if params.len() != 7 {
        return Err(Error::InvalidConfig(format!(
            "--params needs exactly 7 rationals (a2,a3,a4,a5,b3,b4,b5), got {}",
            params.len()
        )));
    }
    let mut values: [Rational; 7] = std::array::from_fn(|_| Rational::from_integer(0.into()));
    for (k, raw) in params.iter().enumerate() {
        values[k] = parse_rational(raw).map_err(|message| Error::Parse {
            line: 0,
            field: Some(k + 1),
            message,
        })?;
    }
    let map = example_family(&values);
    match out_path {
        Some(path) => {
            map.write_matrix_file(path)?;
            writeln!(out, "matrix written: {}", path.display()).ok();
        }
        None => {
            write!(out, "{}", map.to_matrix_text()).ok();
        }
    }
    Ok(0)
}
