//! The `nsfn` command line.
//!
//! ```text
//! nsfn compute --a 2 --n 4
//! nsfn table --n-max 12 --format csv
//! nsfn verify theorem1 --n-max 100 --a-max 100
//! nsfn verify theorem3 --n-max 200 --m 0 --m 2 --m -1
//! nsfn verify all --jobs 4 --out reports.json
//! nsfn primes --max 100
//! nsfn series --a 6 --cutoff 100000 --tolerance 0.005
//! nsfn coeffs --n 5
//! ```
//!
//! Exit status is 0 on success, 1 when any identity produced a
//! counterexample, 2 on a usage or domain error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analytic::{self, SeriesCheck, DEFAULT_CUTOFF, DEFAULT_TOLERANCE};
use crate::arith::{build_sieve, is_prime};
use crate::identities::{self, DEFAULT_EXPONENTS};
use crate::ns::{ns, NsTable};
use crate::qseries;
use crate::report::{big_int_value, Jobs, VerificationReport};
use crate::{Error, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default upper bound for every sweep.
pub const DEFAULT_N_MAX: u64 = 200;
/// Default `a` range for the Dirichlet checks.
pub const DEFAULT_SERIES_A_MAX: u64 = 10;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "nsfn",
    version,
    about = "Compute Ns(a, n) and verify the identities it satisfies"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

impl RunConfig {
    /// Parses a full argument list, program name first.
    pub fn from_args<I, T>(args: I) -> std::result::Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        <Self as Parser>::try_parse_from(args)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print Ns(a, n).
    Compute {
        #[arg(long)]
        a: u64,
        #[arg(long, value_parser = positive())]
        n: u64,
    },
    /// Emit rows 1..=n-max of Ns, row n holding a = 0..n-1.
    Table {
        #[arg(long, default_value_t = DEFAULT_N_MAX, value_parser = positive())]
        n_max: u64,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        #[command(flatten)]
        params: SweepParams,
    },
    /// List odd n ≤ max passing the coefficient prime test.
    Primes {
        #[arg(long, alias = "n-max", default_value_t = DEFAULT_N_MAX, value_parser = clap::value_parser!(u64).range(3..))]
        max: u64,
    },
    /// Dirichlet partial sums against (6/π²)·σ₋₁(a).
    Series {
        /// Single a; otherwise 1..=a-max.
        #[arg(long, value_parser = positive())]
        a: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SERIES_A_MAX, value_parser = positive())]
        a_max: u64,
        #[arg(long, default_value_t = DEFAULT_CUTOFF, value_parser = positive())]
        cutoff: u64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
        tolerance: f64,
    },
    /// Dump the coefficients of ∏_{i=1}^{n-1}(1 - q^i).
    Coeffs {
        #[arg(long, value_parser = positive())]
        n: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SweepParams {
    #[arg(long, default_value_t = DEFAULT_N_MAX, value_parser = positive())]
    pub n_max: u64,
    /// Defaults to n-max (10 for dirichlet).
    #[arg(long, value_parser = clap::value_parser!(u64))]
    pub a_max: Option<u64>,
    /// Exponents for theorem3; repeatable.
    #[arg(long = "m", allow_negative_numbers = true)]
    pub m: Vec<i32>,
    #[arg(long, default_value_t = DEFAULT_CUTOFF, value_parser = positive())]
    pub cutoff: u64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
    pub tolerance: f64,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams {
            n_max: DEFAULT_N_MAX,
            a_max: None,
            m: Vec::new(),
            cutoff: DEFAULT_CUTOFF,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Theorem1,
    Theorem1Abs,
    Theorem2,
    Theorem3,
    RowSums,
    Theorem4,
    Corollary1,
    Corollary3,
    PrimeTest,
    Dirichlet,
    /// Every identity above, in this order.
    All,
}

impl Identity {
    pub const EACH: [Identity; 10] = [
        Identity::Theorem1,
        Identity::Theorem1Abs,
        Identity::Theorem2,
        Identity::Theorem3,
        Identity::RowSums,
        Identity::Theorem4,
        Identity::Corollary1,
        Identity::Corollary3,
        Identity::PrimeTest,
        Identity::Dirichlet,
    ];
}

fn positive() -> clap::builder::RangedU64ValueParser {
    clap::value_parser!(u64).range(1..)
}

fn parse_tolerance(s: &str) -> std::result::Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t.is_finite() && t > 0.0 {
        Ok(t)
    } else {
        Err("tolerance must be a positive number".into())
    }
}

/// What a command produced: the rendered report and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            exit_code: EXIT_PASS,
        }
    }

    fn with_status(output: String, pass: bool) -> Self {
        Outcome {
            output,
            exit_code: if pass { EXIT_PASS } else { EXIT_COUNTEREXAMPLE },
        }
    }
}

/// Runs one verification sweep.
pub fn run_identity(identity: Identity, p: &SweepParams, jobs: Jobs) -> Result<VerificationReport> {
    let a_max = p.a_max.unwrap_or(p.n_max);
    match identity {
        Identity::Theorem1 => identities::verify_theorem1(p.n_max, a_max, jobs),
        Identity::Theorem1Abs => identities::verify_theorem1_abs(p.n_max, a_max, jobs),
        Identity::Theorem2 => identities::verify_theorem2(p.n_max, jobs),
        Identity::Theorem3 => {
            let ms = if p.m.is_empty() {
                DEFAULT_EXPONENTS.to_vec()
            } else {
                p.m.clone()
            };
            identities::verify_theorem3(p.n_max, &ms, jobs)
        }
        Identity::RowSums => identities::verify_row_sums(p.n_max, jobs),
        Identity::Theorem4 => qseries::verify_theorem4(p.n_max),
        Identity::Corollary1 => qseries::verify_corollary1(p.n_max),
        Identity::Corollary3 => qseries::verify_corollary3(p.n_max, 2),
        Identity::PrimeTest => qseries::verify_prime_test(p.n_max.max(3)),
        Identity::Dirichlet => analytic::verify_dirichlet(
            p.a_max.unwrap_or(DEFAULT_SERIES_A_MAX).max(1),
            p.cutoff,
            p.tolerance,
            jobs,
        ),
        Identity::All => Err(Error::domain(
            "run_identity",
            "`all` is not a single identity",
        )),
    }
}

fn render_reports(reports: &[VerificationReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = if reports.len() == 1 {
                reports[0].to_json()
            } else {
                serde_json::to_string_pretty(reports).expect("reports serialize")
            };
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("identity,range,cases,counterexamples,status\n");
            for r in reports {
                let _ = writeln!(
                    s,
                    "{},\"{}\",{},{},{}",
                    r.identity,
                    r.range_description(),
                    r.cases,
                    r.counterexamples.len(),
                    r.status
                );
            }
            s
        }
    }
}

/// Executes a command without touching stdout or the filesystem.
pub fn execute(config: &RunConfig) -> Result<Outcome> {
    let jobs = Jobs(config.jobs.map(|j| j as usize));
    match &config.command {
        Command::Compute { a, n } => {
            let v = ns(*a, *n)?;
            Ok(Outcome::ok(match config.format {
                None => format!("{v}\n"),
                Some(OutputFormat::Csv) => format!("a,n,ns\n{a},{n},{v}\n"),
                Some(OutputFormat::Json) => format!("{}\n", json!({"a": a, "n": n, "ns": v})),
            }))
        }
        Command::Table { n_max } => {
            let table = NsTable::build(*n_max)?;
            Ok(Outcome::ok(render_table(
                &table,
                config.format.unwrap_or(OutputFormat::Csv),
            )))
        }
        Command::Verify { identity, params } => {
            let format = config.format.unwrap_or(OutputFormat::Json);
            let reports = if *identity == Identity::All {
                Identity::EACH
                    .iter()
                    .map(|&id| run_identity(id, params, jobs))
                    .collect::<Result<Vec<_>>>()?
            } else {
                vec![run_identity(*identity, params, jobs)?]
            };
            let pass = reports.iter().all(VerificationReport::passed);
            let mut output = render_reports(&reports, format);
            if !pass && format == OutputFormat::Csv {
                for r in reports.iter().filter(|r| !r.passed()) {
                    for ce in &r.counterexamples {
                        let _ = writeln!(output, "# {} {}", r.identity, json!(ce));
                    }
                }
            }
            Ok(Outcome::with_status(output, pass))
        }
        Command::Primes { max } => {
            let sweep = qseries::prime_test_sweep(*max)?;
            let primes: Vec<u64> = sweep.iter().filter(|(_, t)| *t).map(|(n, _)| *n).collect();
            let mismatches: Vec<u64> = sweep
                .iter()
                .filter(|(n, t)| *t != is_prime(*n))
                .map(|(n, _)| *n)
                .collect();
            let output = match config.format.unwrap_or(OutputFormat::Csv) {
                OutputFormat::Csv => {
                    let mut s = String::from("p\n");
                    for p in &primes {
                        let _ = writeln!(s, "{p}");
                    }
                    s
                }
                OutputFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({
                        "max": max,
                        "primes": primes,
                        "agrees_with_trial_division": mismatches.is_empty(),
                        "mismatches": mismatches,
                    }))
                    .expect("serializes")
                ),
            };
            Ok(Outcome::with_status(output, mismatches.is_empty()))
        }
        Command::Series {
            a,
            a_max,
            cutoff,
            tolerance,
        } => {
            let range: Vec<u64> = match a {
                Some(a) => vec![*a],
                None => (1..=*a_max).collect(),
            };
            let sieve = build_sieve(*cutoff as usize)?;
            let checks = jobs.install(|| {
                use rayon::prelude::*;
                range
                    .par_iter()
                    .map(|&a| analytic::dirichlet_check_with(&sieve, a, *cutoff, *tolerance))
                    .collect::<Result<Vec<SeriesCheck>>>()
            })?;
            let pass = checks.iter().all(|c| c.pass);
            Ok(Outcome::with_status(
                render_series(&checks, config.format.unwrap_or(OutputFormat::Json)),
                pass,
            ))
        }
        Command::Coeffs { n } => {
            let poly = qseries::poly_product(*n)?;
            let output = match config.format.unwrap_or(OutputFormat::Csv) {
                OutputFormat::Csv => {
                    let mut s = String::from("k,coefficient\n");
                    for (k, c) in poly.coefficients().iter().enumerate() {
                        let _ = writeln!(s, "{k},{c}");
                    }
                    s
                }
                OutputFormat::Json => {
                    let coeffs: Vec<Value> =
                        poly.coefficients().iter().map(big_int_value).collect();
                    format!(
                        "{}\n",
                        json!({"n": n, "degree": poly.degree(), "coefficients": coeffs})
                    )
                }
            };
            Ok(Outcome::ok(output))
        }
    }
}

fn render_table(table: &NsTable, format: OutputFormat) -> String {
    let mut s = String::new();
    match format {
        OutputFormat::Csv => {
            s.push('n');
            for a in 0..table.n_max() {
                let _ = write!(s, ",a{a}");
            }
            s.push('\n');
            for (n, row) in table.rows() {
                let _ = write!(s, "{n}");
                for v in row {
                    let _ = write!(s, ",{v}");
                }
                s.push('\n');
            }
        }
        OutputFormat::Json => {
            let rows: Vec<&[i64]> = table.rows().map(|(_, r)| r).collect();
            let _ = writeln!(s, "{}", json!({"n_max": table.n_max(), "rows": rows}));
        }
    }
    s
}

fn render_series(checks: &[SeriesCheck], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(checks).expect("serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from(
                "a,cutoff,partial_sum,target,residual,double_series_residual,tolerance,pass\n",
            );
            for c in checks {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    c.a,
                    c.cutoff,
                    c.partial_sum,
                    c.target,
                    c.residual,
                    c.double_series_residual,
                    c.tolerance,
                    c.pass
                );
            }
            s
        }
    }
}

/// Executes a command, writes its output to `--out` or stdout, and returns the
/// process exit status. Errors go to stderr as a single line.
pub fn run(config: &RunConfig) -> i32 {
    let outcome = match execute(config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("nsfn: {e}");
            return EXIT_USAGE;
        }
    };
    match &config.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.output) {
                eprintln!("nsfn: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{}", outcome.output),
    }
    outcome.exit_code
}

/// Parses arguments and runs; clap reports malformed flags with status 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::from_args(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Outcome {
        let cfg = RunConfig::try_parse_from(std::iter::once("nsfn").chain(args.iter().copied()))
            .expect("parses");
        execute(&cfg).expect("executes")
    }

    #[test]
    fn compute_prints_value() {
        let o = exec(&["compute", "--a", "2", "--n", "4"]);
        assert_eq!(o.output, "-2\n");
        assert_eq!(o.exit_code, EXIT_PASS);
        let o = exec(&["compute", "--a", "2", "--n", "4", "--format", "json"]);
        let v: Value = serde_json::from_str(&o.output).unwrap();
        assert_eq!(v["ns"], -2);
    }

    #[test]
    fn table_rows_are_ragged() {
        let o = exec(&["table", "--n-max", "5"]);
        let lines: Vec<&str> = o.output.lines().collect();
        assert_eq!(lines[0], "n,a0,a1,a2,a3,a4");
        assert_eq!(lines[4], "4,2,0,-2,0");
        for (i, line) in lines[1..].iter().enumerate() {
            assert_eq!(line.split(',').count(), i + 2);
        }
    }

    #[test]
    fn negative_exponents_parse() {
        let cfg = RunConfig::try_parse_from([
            "nsfn", "verify", "theorem3", "--n-max", "20", "--m", "-1", "--m", "2",
        ])
        .unwrap();
        match &cfg.command {
            Command::Verify { params, .. } => assert_eq!(params.m, vec![-1, 2]),
            _ => panic!("wrong command"),
        }
        assert_eq!(execute(&cfg).unwrap().exit_code, EXIT_PASS);
    }

    #[test]
    fn malformed_flags_rejected() {
        for args in [
            vec!["nsfn", "compute", "--a", "1", "--n", "0"],
            vec!["nsfn", "compute", "--a", "1"],
            vec!["nsfn", "verify", "theorem9"],
            vec!["nsfn", "table", "--bogus"],
            vec!["nsfn", "series", "--tolerance", "0"],
            vec!["nsfn", "series", "--tolerance", "-1e-3"],
        ] {
            assert!(RunConfig::from_args(args.clone()).is_err(), "{args:?}");
        }
    }

    #[test]
    fn series_failure_exits_one() {
        let o = exec(&["series", "--a", "1", "--cutoff", "1", "--tolerance", "1e-6"]);
        assert_eq!(o.exit_code, EXIT_COUNTEREXAMPLE);
    }

    #[test]
    fn coeffs_dump() {
        let o = exec(&["coeffs", "--n", "4"]);
        assert_eq!(
            o.output,
            "k,coefficient\n0,1\n1,-1\n2,-1\n3,0\n4,1\n5,1\n6,-1\n"
        );
    }
}
