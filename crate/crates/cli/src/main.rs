//! `spectral-kstat`: compute spectral and classical k-statistics, draw
//! spectral samples, run Monte Carlo verification suites, print tables.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a gated check failed.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use spectral_kstat::classical_stats::{k_statistic, Sample, CLASSICAL_DEGREE_CAP};
use spectral_kstat::combinat::{coeff_d, coeff_s, enumerate_partitions, moebius, SetPartition};
use spectral_kstat::experiments::{
    builtin_population, read_population, report_to_json, run_suite, ExperimentConfig, Suite,
    Verdict,
};
use spectral_kstat::group_algebra::{invert, mu_identity};
use spectral_kstat::random_matrix::{spectral_sample, RngStream};
use spectral_kstat::spectral_stats::{
    closed_form_k_annotation, closed_form_kstat, generalized_polykay_l,
    kstat_power_sum_coefficients, power_sum_coefficients, spectral_kstat, SPECTRAL_DEGREE_CAP,
};
use spectral_kstat::{IntegerPartition, Rational, Scalar};

#[derive(Parser)]
#[command(
    name = "spectral-kstat",
    version,
    about = "Spectral k-statistics and polykays"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every statistic of degree ≤ d on a population file.
    Stats {
        #[arg(long)]
        input: PathBuf,
        /// Maximum degree [default: min(4, n)]
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = StatsKind::All)]
        kind: StatsKind,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Draw spectral samples of size m, one sorted row each.
    Sample {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Output CSV [default: stdout]
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run Monte Carlo verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, conflicts_with = "builtin")]
        input: Option<PathBuf>,
        /// arange8, symm3 or skew6
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 20_000)]
        replicates: usize,
        #[arg(long)]
        seed: u64,
        /// JSON report path
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print combinatorial coefficients and power-sum forms.
    Tables {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum StatsKind {
    SpectralK,
    SpectralL,
    ClassicalK,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Inheritance,
    Variance,
    Limit,
    All,
}

impl SuiteArg {
    fn suite(self) -> Suite {
        match self {
            SuiteArg::Inheritance => Suite::Inheritance,
            SuiteArg::Variance => Suite::Variance,
            SuiteArg::Limit => Suite::Limit,
            SuiteArg::All => Suite::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Stats {
            input,
            degree,
            kind,
            format,
        } => cmd_stats(&read_input(&input)?, degree, kind, format),
        Command::Sample {
            input,
            m,
            count,
            seed,
            output,
        } => cmd_sample(&read_input(&input)?, m, count, seed, output),
        Command::Verify {
            suite,
            input,
            builtin,
            m,
            replicates,
            seed,
            output,
        } => cmd_verify(suite.suite(), input, builtin, m, replicates, seed, output),
        Command::Tables { degree, n } => cmd_tables(degree, n),
    }
}

fn read_input(path: &PathBuf) -> Result<Sample<Rational>> {
    read_population(path).with_context(|| format!("reading {}", path.display()))
}

fn cmd_stats(
    x: &Sample<Rational>,
    degree: Option<usize>,
    kind: StatsKind,
    format: Format,
) -> Result<ExitCode> {
    let n = x.len();
    let d = degree.unwrap_or(n.min(4));
    if d == 0 {
        bail!("degree must be positive");
    }
    if d > SPECTRAL_DEGREE_CAP {
        bail!("degree {d} exceeds the cap of {SPECTRAL_DEGREE_CAP}");
    }
    if d > n {
        bail!("degree exceeds sample size (degree {d}, sample size {n})");
    }
    let kinds: &[StatsKind] = match kind {
        StatsKind::All => &[
            StatsKind::SpectralK,
            StatsKind::SpectralL,
            StatsKind::ClassicalK,
        ],
        k => std::slice::from_ref(match k {
            StatsKind::SpectralK => &StatsKind::SpectralK,
            StatsKind::SpectralL => &StatsKind::SpectralL,
            _ => &StatsKind::ClassicalK,
        }),
    };
    let mut rows: Vec<(&str, IntegerPartition, Rational)> = Vec::new();
    for &k in kinds {
        let (name, top) = match k {
            StatsKind::SpectralK => ("spectral_k", d),
            StatsKind::SpectralL => ("spectral_l", d),
            _ => {
                if kind == StatsKind::ClassicalK && d > CLASSICAL_DEGREE_CAP {
                    bail!("classical k-statistic degree {d} exceeds the cap of {CLASSICAL_DEGREE_CAP}");
                }
                ("classical_k", d.min(CLASSICAL_DEGREE_CAP))
            }
        };
        for i in 1..=top {
            for lambda in enumerate_partitions(i)? {
                let v = match k {
                    StatsKind::SpectralK => spectral_kstat(&lambda, x)?,
                    StatsKind::SpectralL => generalized_polykay_l(&lambda, x)?,
                    _ => k_statistic(&lambda, x)?,
                };
                rows.push((name, lambda, v));
            }
        }
    }
    match format {
        Format::Json => {
            let stats: Vec<_> = rows
                .iter()
                .map(|(k, l, v)| {
                    serde_json::json!({
                        "kind": k,
                        "lambda": l.parts(),
                        "value": v.to_string(),
                        "float": v.to_f64(),
                    })
                })
                .collect();
            let doc = serde_json::json!({ "n": n, "degree": d, "statistics": stats });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Table => {
            println!(
                "{:<12} {:<12} {:>24} {:>16}",
                "kind", "lambda", "value", "float"
            );
            for (k, l, v) in &rows {
                println!(
                    "{:<12} {:<12} {:>24} {:>16.9e}",
                    k,
                    l.to_string(),
                    v.to_string(),
                    v.to_f64()
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sample(
    x: &Sample<Rational>,
    m: usize,
    count: usize,
    seed: u64,
    output: Option<PathBuf>,
) -> Result<ExitCode> {
    let xf = x.to_f64();
    let mut out = String::new();
    for r in 0..count {
        let y = spectral_sample(&xf, m, &RngStream::new(seed, r as u64))?;
        let row: Vec<String> = y.values().iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    match output {
        Some(path) => {
            std::fs::write(&path, out).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{out}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: Suite,
    input: Option<PathBuf>,
    builtin: Option<String>,
    m: Option<usize>,
    replicates: usize,
    seed: u64,
    output: Option<PathBuf>,
) -> Result<ExitCode> {
    let (x, name) = match (&input, &builtin) {
        (Some(path), _) => (read_input(path)?, None),
        (None, Some(b)) => (builtin_population(b)?, Some(b.clone())),
        (None, None) if suite == Suite::Limit => (builtin_population("arange8")?, None),
        (None, None) => bail!("one of --input or --builtin is required"),
    };
    let m = match (m, suite) {
        (Some(m), _) => m,
        (None, Suite::Limit) => x.len(),
        (None, _) => bail!("--m is required for the {} suite", suite.name()),
    };
    let mut cfg = ExperimentConfig::new(x, m, replicates, seed);
    cfg.population_name = name;
    cfg.output = output.clone();
    let report = run_suite(suite, &cfg)?;
    for r in &report.results {
        let tag = match (r.gated, r.pass) {
            (false, _) => "DEMO",
            (true, true) => "PASS",
            (true, false) => "FAIL",
        };
        println!(
            "{tag:<5} {:<9} {:<13} {:<10} m={:<3} target={:<14.8} estimate={:<14.8} se={:<11.3e} z={:.2}",
            r.suite,
            r.kind.name(),
            r.lambda.to_string(),
            r.m,
            r.target,
            r.estimate,
            r.stderr,
            r.z
        );
    }
    let verdict = match report.verdict {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Demonstration => "DEMONSTRATION",
    };
    println!("verdict: {verdict}");
    if let Some(path) = output {
        std::fs::write(&path, report_to_json(&report)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if report.failed() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn cmd_tables(i: usize, n: usize) -> Result<ExitCode> {
    let classes = enumerate_partitions(i)?;
    println!(
        "degree {i}, classes: {}",
        classes
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!();
    println!(
        "{:<14} {:>10} {:>10} {:>14}",
        "lambda", "d_lambda", "s_lambda", "m(pi, 1)"
    );
    for lambda in &classes {
        let pi = SetPartition::of_class(lambda);
        let mu = moebius(&pi, &SetPartition::top(i))?;
        println!(
            "{:<14} {:>10} {:>10} {:>14}",
            lambda.to_string(),
            coeff_d(lambda).to_string(),
            coeff_s(lambda).to_string(),
            mu.to_string()
        );
    }
    println!();
    if i > n {
        bail!("degree exceeds sample size (degree {i}, sample size {n})");
    }
    let inverse = invert(&mu_identity(n, i)?)?;
    let labelled: Vec<String> = classes
        .iter()
        .zip(inverse.values())
        .map(|(c, v)| format!("{c} {v}"))
        .collect();
    println!("mu(I_{n})^-1: {}", labelled.join(", "));
    if i > 4 {
        return Ok(ExitCode::SUCCESS);
    }
    println!();
    println!(
        "power-sum coefficients at n = {n} over {}",
        fmt_vec_names(&classes)
    );
    for lambda in &classes {
        let alg = kstat_power_sum_coefficients(lambda, n)?;
        let printed = power_sum_coefficients(n, i, |p| closed_form_kstat(lambda, p))?;
        let verdict = if alg == printed { "MATCH" } else { "MISMATCH" };
        println!("K{:<12} algorithm    {}", lambda.to_string(), fmt_vec(&alg));
        println!("{:<13} closed form  {}  {verdict}", "", fmt_vec(&printed));
        let annotation = power_sum_coefficients(n, i, |p| {
            Ok(closed_form_k_annotation(lambda, p)?.unwrap_or_default())
        });
        if i <= 3 && n >= i {
            if let Ok(a) = annotation {
                let note = if a == alg { "MATCH" } else { "MISMATCH" };
                println!("{:<13} k-form       {}  {note}", "", fmt_vec(&a));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn fmt_vec_names(classes: &[IntegerPartition]) -> String {
    let names: Vec<String> = classes
        .iter()
        .map(|c| {
            c.parts()
                .iter()
                .map(|p| format!("S{p}"))
                .collect::<Vec<_>>()
                .join("")
        })
        .collect();
    format!("({})", names.join(", "))
}
