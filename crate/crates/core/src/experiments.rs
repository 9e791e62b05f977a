//! Monte Carlo checks of spectral statistics, with JSON reports and CSV
//! population input.
//!
//! Three suites are available:
//!
//! - inheritance: the mean of `𝔎_λ(y)`, `l_λ(y)` over spectral samples (and of
//!   `k_λ(y)` over simple random samples) against the exact value on `x`;
//! - variance: conditional variances/covariances of `𝔎_(1)`, `𝔎_(2)` against
//!   their closed forms, with jackknife standard errors;
//! - limit: normalized statistics on quantile spectra of a fixed law against
//!   products of its free cumulants. Informational only.
//!
//! Replicate `r` always uses stream `r` of the configured seed, and results
//! are aggregated in replicate order, so reports do not depend on the number
//! of threads.

use std::path::{Path, PathBuf};
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical_stats::{
    k_statistic_from_power_sums, power_sums, PowerSums, Sample, CLASSICAL_DEGREE_CAP,
};
use crate::combinat::{coeff_d, cycle_prefactor, enumerate_partitions, IntegerPartition, Rational};
use crate::error::{Error, Result};
use crate::free_probability::{moments_to_free_cumulants, semicircle_moments, MomentSequence};
use crate::group_algebra::classes;
use crate::random_matrix::{spectral_sample_with, srs_sample_with, RngStream, RNG_NAME};
use crate::scalar::Scalar;
use crate::spectral_stats::{
    conditional_moment_formulas, generalized_polykay_l, kernel, normalized_spectral,
    polykay_l_coefficients, power_sum_coefficients, spectral_kstat, ConditionalMoment,
    NormalizedKind, SPECTRAL_DEGREE_CAP,
};

/// Smallest replicate count accepted by the Monte Carlo suites.
pub const MIN_REPLICATES: usize = 100;
/// `|z|` threshold for mean and most variance checks.
pub const Z_THRESHOLD: f64 = 4.0;
/// `|z|` threshold for `var 𝔎_(2)`, whose estimator has heavier tails.
pub const Z_THRESHOLD_VAR_K2: f64 = 5.0;
/// Relative scale below which a standard error is treated as zero, and an
/// estimate with zero standard error must match its target (e.g. `m = n`).
pub const EXACT_TOLERANCE: f64 = 1e-8;

/// Stream offset separating simple-random-sampling draws from spectral draws.
const SRS_STREAM_OFFSET: u64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatKind {
    SpectralK,
    SpectralL,
    ClassicalK,
    VarK1,
    CovK1K2,
    VarK2,
    NormalizedK,
    NormalizedL,
}

impl StatKind {
    pub fn name(self) -> &'static str {
        match self {
            StatKind::SpectralK => "spectral_k",
            StatKind::SpectralL => "spectral_l",
            StatKind::ClassicalK => "classical_k",
            StatKind::VarK1 => "var_k1",
            StatKind::CovK1K2 => "cov_k1_k2",
            StatKind::VarK2 => "var_k2",
            StatKind::NormalizedK => "normalized_k",
            StatKind::NormalizedL => "normalized_l",
        }
    }

    fn conditional(self) -> Option<ConditionalMoment> {
        match self {
            StatKind::VarK1 => Some(ConditionalMoment::VarK1),
            StatKind::CovK1K2 => Some(ConditionalMoment::CovK1K2),
            StatKind::VarK2 => Some(ConditionalMoment::VarK2),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatisticSpec {
    pub kind: StatKind,
    pub lambda: IntegerPartition,
}

impl StatisticSpec {
    pub fn new(kind: StatKind, lambda: IntegerPartition) -> Self {
        Self { kind, lambda }
    }

    pub fn conditional(which: ConditionalMoment) -> Self {
        let (kind, parts) = match which {
            ConditionalMoment::VarK1 => (StatKind::VarK1, vec![1, 1]),
            ConditionalMoment::CovK1K2 => (StatKind::CovK1K2, vec![2, 1]),
            ConditionalMoment::VarK2 => (StatKind::VarK2, vec![2, 2]),
        };
        Self::new(kind, IntegerPartition::new(parts).expect("valid"))
    }
}

/// A compactly supported law whose midpoint quantiles give the spectra of the
/// limit demonstration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// Standard semicircle on `[-2, 2]` (free cumulants `0, 1, 0, …`).
    Semicircle,
    /// Uniform on `[0, 1]`.
    Uniform,
}

impl Law {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "semicircle" => Ok(Law::Semicircle),
            "uniform" => Ok(Law::Uniform),
            _ => Err(Error::argument(format!("unknown law `{name}`"))),
        }
    }

    pub fn moments(self, d: usize) -> Result<MomentSequence<Rational>> {
        match self {
            Law::Semicircle => semicircle_moments(d),
            Law::Uniform => MomentSequence::new(
                (1..=d)
                    .map(|k| Rational::new(1.into(), (k as i64 + 1).into()))
                    .collect(),
            ),
        }
    }

    fn cdf(self, x: f64) -> f64 {
        match self {
            Law::Semicircle => {
                let x = x.clamp(-2.0, 2.0);
                0.5 + x * (4.0 - x * x).sqrt() / (4.0 * std::f64::consts::PI)
                    + (x / 2.0).asin() / std::f64::consts::PI
            }
            Law::Uniform => x.clamp(0.0, 1.0),
        }
    }

    fn support(self) -> (f64, f64) {
        match self {
            Law::Semicircle => (-2.0, 2.0),
            Law::Uniform => (0.0, 1.0),
        }
    }

    /// `F^{-1}(u)` by bisection.
    pub fn quantile(self, u: f64) -> f64 {
        let (mut lo, mut hi) = self.support();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.cdf(mid) < u {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// `F^{-1}((j − 1/2)/m)`, `j = 1..m`.
    pub fn midpoint_quantiles(self, m: usize) -> Vec<f64> {
        (1..=m)
            .map(|j| self.quantile((j as f64 - 0.5) / m as f64))
            .collect()
    }
}

mod rational_strings {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|t| {
                super::parse_rational(t)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational `{t}`")))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub population_name: Option<String>,
    #[serde(with = "rational_strings")]
    pub population: Vec<Rational>,
    pub m: usize,
    pub replicates: usize,
    pub seed: u64,
    /// Statistics to check; empty selects each suite's defaults.
    #[serde(default)]
    pub statistics: Vec<StatisticSpec>,
    pub degree_cap: usize,
    /// Law and sizes for the limit demonstration.
    pub law: Law,
    pub sizes: Vec<usize>,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(population: Sample<Rational>, m: usize, replicates: usize, seed: u64) -> Self {
        Self {
            population_name: None,
            population: population.values().to_vec(),
            m,
            replicates,
            seed,
            statistics: Vec::new(),
            degree_cap: SPECTRAL_DEGREE_CAP,
            law: Law::Semicircle,
            sizes: vec![8, 16, 32, 64],
            output: None,
        }
    }

    pub fn with_statistics(mut self, statistics: Vec<StatisticSpec>) -> Self {
        self.statistics = statistics;
        self
    }

    pub fn population(&self) -> Result<Sample<Rational>> {
        Sample::new(self.population.clone())
    }

    fn validate_sampling(&self) -> Result<Sample<Rational>> {
        let x = self.population()?;
        if self.m == 0 || self.m > x.len() {
            return Err(Error::argument(format!(
                "sample size m = {} must satisfy 1 ≤ m ≤ n = {}",
                self.m,
                x.len()
            )));
        }
        if self.replicates < MIN_REPLICATES {
            return Err(Error::argument(format!(
                "at least {MIN_REPLICATES} replicates are required, got {}",
                self.replicates
            )));
        }
        Ok(x)
    }

    fn check_degree(&self, lambda: &IntegerPartition) -> Result<()> {
        let i = lambda.weight();
        if i > self.degree_cap {
            return Err(Error::Capacity {
                what: "statistic degree",
                requested: i,
                cap: self.degree_cap,
            });
        }
        if i > self.m {
            return Err(Error::DegreeExceedsSampleSize {
                degree: i,
                size: self.m,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatisticResult {
    pub suite: String,
    pub lambda: IntegerPartition,
    pub kind: StatKind,
    pub m: usize,
    pub target_rational: String,
    pub target: f64,
    pub estimate: f64,
    pub stderr: f64,
    pub z: f64,
    pub pass: bool,
    pub gated: bool,
    pub threshold: f64,
    pub replicates: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_lambda: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Demonstration,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralExperimentReport {
    pub suite: String,
    pub config: ExperimentConfig,
    pub rng: String,
    pub verdict: Verdict,
    pub results: Vec<StatisticResult>,
    pub elapsed_s: f64,
}

impl SpectralExperimentReport {
    fn assemble(
        suite: &str,
        cfg: &ExperimentConfig,
        results: Vec<StatisticResult>,
        start: Instant,
    ) -> Self {
        let gated: Vec<_> = results.iter().filter(|r| r.gated).collect();
        let verdict = if gated.is_empty() {
            Verdict::Demonstration
        } else if gated.iter().all(|r| r.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self {
            suite: suite.into(),
            config: cfg.clone(),
            rng: RNG_NAME.into(),
            verdict,
            results,
            elapsed_s: start.elapsed().as_secs_f64(),
        }
    }

    /// True when some gated check failed.
    pub fn failed(&self) -> bool {
        self.results.iter().any(|r| r.gated && !r.pass)
    }
}

/// Applies the pass rule and fills a result row.
fn judge(
    suite: &str,
    spec: &StatisticSpec,
    cfg: &ExperimentConfig,
    target: &Rational,
    estimate: f64,
    stderr: f64,
    threshold: f64,
) -> StatisticResult {
    let target_f = target.to_f64();
    let diff = estimate - target_f;
    let tolerance = EXACT_TOLERANCE * (1.0 + target_f.abs());
    // Without sampling variance the standard error is rounding noise, and the
    // check becomes an exactness test.
    let z = if stderr > tolerance {
        diff / stderr
    } else if diff.abs() <= tolerance {
        0.0
    } else {
        f64::MAX.copysign(diff)
    };
    StatisticResult {
        suite: suite.into(),
        lambda: spec.lambda.clone(),
        kind: spec.kind,
        m: cfg.m,
        target_rational: target.to_string(),
        target: target_f,
        estimate,
        stderr,
        z,
        pass: z.abs() <= threshold,
        gated: true,
        threshold,
        replicates: cfg.replicates,
        seed: cfg.seed,
        d_lambda: None,
    }
}

/// Mean and standard error `s/√R`.
pub fn mean_and_stderr(values: &[f64]) -> (f64, f64) {
    let r = values.len() as f64;
    let mean = values.iter().sum::<f64>() / r;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    (mean, (ss / (r - 1.0) / r).sqrt())
}

/// Unbiased sample covariance and its delete-one jackknife standard error.
pub fn covariance_with_jackknife(a: &[f64], b: &[f64]) -> (f64, f64) {
    let n = a.len();
    assert_eq!(n, b.len());
    assert!(n >= 3, "jackknife needs at least three replicates");
    let nf = n as f64;
    let ma = a.iter().sum::<f64>() / nf;
    let mb = b.iter().sum::<f64>() / nf;
    let da: Vec<f64> = a.iter().map(|v| v - ma).collect();
    let db: Vec<f64> = b.iter().map(|v| v - mb).collect();
    let sa: f64 = da.iter().sum();
    let sb: f64 = db.iter().sum();
    let sab: f64 = da.iter().zip(&db).map(|(x, y)| x * y).sum();
    let cov = (sab - sa * sb / nf) / (nf - 1.0);
    let k = nf - 1.0;
    let leave_out: Vec<f64> = da
        .iter()
        .zip(&db)
        .map(|(x, y)| {
            let (sa_i, sb_i) = (sa - x, sb - y);
            (sab - x * y - sa_i * sb_i / k) / (k - 1.0)
        })
        .collect();
    let mean_lo = leave_out.iter().sum::<f64>() / nf;
    let var: f64 = leave_out
        .iter()
        .map(|v| (v - mean_lo) * (v - mean_lo))
        .sum::<f64>()
        * (nf - 1.0)
        / nf;
    (cov, var.sqrt())
}

/// A statistic of degree `i` written as a fixed combination of the power-sum
/// products `Π_j S_{ω_j}`, `ω ⊢ i`, at sample size `m`.
struct LinearStatistic {
    degree: usize,
    coeffs: Vec<f64>,
}

impl LinearStatistic {
    fn exact(degree: usize, coeffs: &[Rational]) -> Self {
        Self {
            degree,
            coeffs: coeffs.iter().map(Scalar::to_f64).collect(),
        }
    }

    fn eval(&self, p: &PowerSums<f64>) -> f64 {
        classes(self.degree)
            .expect("degree checked")
            .iter()
            .zip(&self.coeffs)
            .map(|(c, w)| w * p.product(c))
            .sum()
    }
}

fn spectral_k_linear(lambda: &IntegerPartition, m: usize) -> Result<LinearStatistic> {
    let i = lambda.weight();
    let k = kernel(m, i)?;
    let prefactor = Rational::from_integer(cycle_prefactor(lambda));
    let coeffs: Vec<Rational> = k
        .coefficients(lambda)?
        .iter()
        .map(|c| c * &prefactor)
        .collect();
    Ok(LinearStatistic::exact(i, &coeffs))
}

fn spectral_l_linear(lambda: &IntegerPartition, m: usize) -> Result<LinearStatistic> {
    let i = lambda.weight();
    let k = kernel(m, i)?;
    let mut coeffs = vec![Rational::zero(); classes(i)?.len()];
    for (class, w) in polykay_l_coefficients(lambda)? {
        for (slot, c) in coeffs.iter_mut().zip(k.coefficients(&class)?) {
            *slot += &w * c;
        }
    }
    Ok(LinearStatistic::exact(i, &coeffs))
}

fn classical_k_linear(lambda: &IntegerPartition, m: usize) -> Result<LinearStatistic> {
    let i = lambda.weight();
    let coeffs = power_sum_coefficients(m, i, |p| k_statistic_from_power_sums(lambda, p))?;
    Ok(LinearStatistic::exact(i, &coeffs))
}

fn default_inheritance_statistics(m: usize) -> Vec<StatisticSpec> {
    let top = m.min(3);
    let mut out = Vec::new();
    for kind in [
        StatKind::SpectralK,
        StatKind::SpectralL,
        StatKind::ClassicalK,
    ] {
        for i in 1..=top {
            for lambda in enumerate_partitions(i).expect("small degree") {
                out.push(StatisticSpec::new(kind, lambda));
            }
        }
    }
    out
}

/// Compares Monte Carlo means of `𝔎_λ`, `l_λ` (spectral samples) and `k_λ`
/// (simple random samples) with their exact values on the population.
pub fn run_inheritance(cfg: &ExperimentConfig) -> Result<SpectralExperimentReport> {
    let start = Instant::now();
    let results = inheritance_results(cfg)?;
    Ok(SpectralExperimentReport::assemble(
        "inheritance",
        cfg,
        results,
        start,
    ))
}

fn inheritance_results(cfg: &ExperimentConfig) -> Result<Vec<StatisticResult>> {
    let x = cfg.validate_sampling()?;
    let specs = if cfg.statistics.is_empty() {
        default_inheritance_statistics(cfg.m)
    } else {
        cfg.statistics.clone()
    };
    let mut targets = Vec::with_capacity(specs.len());
    let mut linear = Vec::with_capacity(specs.len());
    for spec in &specs {
        cfg.check_degree(&spec.lambda)?;
        let (target, lin) = match spec.kind {
            StatKind::SpectralK => (
                spectral_kstat(&spec.lambda, &x)?,
                spectral_k_linear(&spec.lambda, cfg.m)?,
            ),
            StatKind::SpectralL => (
                generalized_polykay_l(&spec.lambda, &x)?,
                spectral_l_linear(&spec.lambda, cfg.m)?,
            ),
            StatKind::ClassicalK => {
                if spec.lambda.weight() > CLASSICAL_DEGREE_CAP {
                    return Err(Error::Capacity {
                        what: "classical k-statistic degree",
                        requested: spec.lambda.weight(),
                        cap: CLASSICAL_DEGREE_CAP,
                    });
                }
                (
                    crate::classical_stats::k_statistic(&spec.lambda, &x)?,
                    classical_k_linear(&spec.lambda, cfg.m)?,
                )
            }
            other => {
                return Err(Error::argument(format!(
                    "statistic kind {} is not part of the inheritance suite",
                    other.name()
                )))
            }
        };
        targets.push(target);
        linear.push(lin);
    }
    let top = specs.iter().map(|s| s.lambda.weight()).max().unwrap_or(1);
    let needs_srs = specs.iter().any(|s| s.kind == StatKind::ClassicalK);
    let needs_spectral = specs.iter().any(|s| s.kind != StatKind::ClassicalK);
    let xf = x.to_f64();

    let rows: Vec<Vec<f64>> = (0..cfg.replicates as u64)
        .into_par_iter()
        .map(|r| -> Result<Vec<f64>> {
            let spectral = if needs_spectral {
                let y = spectral_sample_with(&xf, cfg.m, &mut RngStream::new(cfg.seed, r).rng())?;
                Some(power_sums(&y, top)?)
            } else {
                None
            };
            let srs = if needs_srs {
                let stream = RngStream::new(cfg.seed, SRS_STREAM_OFFSET + r);
                let y = srs_sample_with(&xf, cfg.m, &mut stream.rng())?;
                Some(power_sums(&y, top)?)
            } else {
                None
            };
            Ok(specs
                .iter()
                .zip(&linear)
                .map(|(spec, lin)| {
                    let p = if spec.kind == StatKind::ClassicalK {
                        &srs
                    } else {
                        &spectral
                    };
                    lin.eval(p.as_ref().expect("sampled above"))
                })
                .collect())
        })
        .collect::<Result<_>>()?;

    let mut results = Vec::with_capacity(specs.len());
    for (j, spec) in specs.iter().enumerate() {
        let column: Vec<f64> = rows.iter().map(|row| row[j]).collect();
        let (estimate, stderr) = mean_and_stderr(&column);
        results.push(judge(
            "inheritance",
            spec,
            cfg,
            &targets[j],
            estimate,
            stderr,
            Z_THRESHOLD,
        ));
    }
    Ok(results)
}

/// Compares Monte Carlo conditional variances/covariances of `𝔎_(1)` and
/// `𝔎_(2)` with their closed forms.
pub fn run_variance_check(cfg: &ExperimentConfig) -> Result<SpectralExperimentReport> {
    let start = Instant::now();
    let results = variance_results(cfg)?;
    Ok(SpectralExperimentReport::assemble(
        "variance", cfg, results, start,
    ))
}

fn variance_results(cfg: &ExperimentConfig) -> Result<Vec<StatisticResult>> {
    let x = cfg.validate_sampling()?;
    let specs: Vec<StatisticSpec> = if cfg.statistics.is_empty() {
        ConditionalMoment::ALL
            .into_iter()
            .filter(|w| cfg.m >= w.min_m() && x.len() >= w.min_n())
            .map(StatisticSpec::conditional)
            .collect()
    } else {
        cfg.statistics.clone()
    };
    let mut targets = Vec::with_capacity(specs.len());
    for spec in &specs {
        let which = spec.kind.conditional().ok_or_else(|| {
            Error::argument(format!(
                "statistic kind {} is not part of the variance suite",
                spec.kind.name()
            ))
        })?;
        targets.push(conditional_moment_formulas(which, &x, cfg.m)?);
    }
    if specs.is_empty() {
        return Err(Error::argument(
            "no conditional moment is defined for this population and m",
        ));
    }
    let m = cfg.m;
    let k1 = spectral_k_linear(&IntegerPartition::single(1), m)?;
    let k2 = if m >= 2 {
        Some(spectral_k_linear(&IntegerPartition::single(2), m)?)
    } else {
        None
    };
    let xf = x.to_f64();
    let draws: Vec<(f64, f64)> = (0..cfg.replicates as u64)
        .into_par_iter()
        .map(|r| -> Result<(f64, f64)> {
            let y = spectral_sample_with(&xf, m, &mut RngStream::new(cfg.seed, r).rng())?;
            let p = power_sums(&y, 2)?;
            Ok((k1.eval(&p), k2.as_ref().map_or(0.0, |k| k.eval(&p))))
        })
        .collect::<Result<_>>()?;
    let a: Vec<f64> = draws.iter().map(|d| d.0).collect();
    let b: Vec<f64> = draws.iter().map(|d| d.1).collect();
    let mut results = Vec::with_capacity(specs.len());
    for (spec, target) in specs.iter().zip(&targets) {
        let (estimate, stderr, threshold) = match spec.kind {
            StatKind::VarK1 => {
                let (v, se) = covariance_with_jackknife(&a, &a);
                (v, se, Z_THRESHOLD)
            }
            StatKind::CovK1K2 => {
                let (v, se) = covariance_with_jackknife(&a, &b);
                (v, se, Z_THRESHOLD)
            }
            _ => {
                let (v, se) = covariance_with_jackknife(&b, &b);
                (v, se, Z_THRESHOLD_VAR_K2)
            }
        };
        results.push(judge(
            "variance", spec, cfg, target, estimate, stderr, threshold,
        ));
    }
    Ok(results)
}

fn default_limit_statistics() -> Vec<StatisticSpec> {
    let mut out = Vec::new();
    for kind in [StatKind::NormalizedK, StatKind::NormalizedL] {
        for i in 1..=3 {
            for lambda in enumerate_partitions(i).expect("small degree") {
                out.push(StatisticSpec::new(kind, lambda));
            }
        }
    }
    out
}

/// Normalized statistics on midpoint-quantile spectra of `cfg.law` at each
/// size in `cfg.sizes`, next to the free-cumulant product `c_{λ_1} c_{λ_2} ⋯`.
///
/// Rows are informational (`gated = false`); `pass` records whether the
/// distance to the target shrank relative to the previous size.
pub fn run_limit_demo(cfg: &ExperimentConfig) -> Result<SpectralExperimentReport> {
    let start = Instant::now();
    let results = limit_results(cfg)?;
    Ok(SpectralExperimentReport::assemble(
        "limit", cfg, results, start,
    ))
}

fn limit_results(cfg: &ExperimentConfig) -> Result<Vec<StatisticResult>> {
    let specs = if cfg.statistics.is_empty() {
        default_limit_statistics()
    } else {
        cfg.statistics.clone()
    };
    if cfg.sizes.is_empty() {
        return Err(Error::argument(
            "the limit demonstration needs at least one size",
        ));
    }
    let top = specs.iter().map(|s| s.lambda.weight()).max().unwrap_or(1);
    let free = moments_to_free_cumulants(&cfg.law.moments(top)?);
    let mut results = Vec::new();
    for spec in &specs {
        let kind = match spec.kind {
            StatKind::NormalizedK => NormalizedKind::KStatistic,
            StatKind::NormalizedL => NormalizedKind::Polykay,
            other => {
                return Err(Error::argument(format!(
                    "statistic kind {} is not part of the limit demonstration",
                    other.name()
                )))
            }
        };
        let target = spec
            .lambda
            .parts()
            .iter()
            .fold(Rational::one(), |acc, &j| acc * free.get(j));
        let mut previous_gap: Option<Rational> = None;
        for &m in &cfg.sizes {
            let degree_cfg = ExperimentConfig { m, ..cfg.clone() };
            degree_cfg.check_degree(&spec.lambda)?;
            // Evaluate exactly on the (float) quantiles so only the
            // quantiles themselves carry rounding.
            let values = cfg
                .law
                .midpoint_quantiles(m)
                .into_iter()
                .map(|q| {
                    Rational::from_float(q).ok_or_else(|| Error::argument("non-finite quantile"))
                })
                .collect::<Result<Vec<_>>>()?;
            let value = normalized_spectral(&spec.lambda, &Sample::new(values)?, kind)?;
            let gap = (&value - &target).abs();
            let closer = previous_gap.as_ref().is_none_or(|g| gap <= *g);
            previous_gap = Some(gap);
            results.push(StatisticResult {
                suite: "limit".into(),
                lambda: spec.lambda.clone(),
                kind: spec.kind,
                m,
                target_rational: target.to_string(),
                target: target.to_f64(),
                estimate: value.to_f64(),
                stderr: 0.0,
                z: 0.0,
                pass: closer,
                gated: false,
                threshold: 0.0,
                replicates: 0,
                seed: cfg.seed,
                d_lambda: Some(coeff_d(&spec.lambda).to_string()),
            });
        }
    }
    Ok(results)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Inheritance,
    Variance,
    Limit,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "inheritance" => Ok(Suite::Inheritance),
            "variance" => Ok(Suite::Variance),
            "limit" => Ok(Suite::Limit),
            "all" => Ok(Suite::All),
            _ => Err(Error::argument(format!("unknown suite `{name}`"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Inheritance => "inheritance",
            Suite::Variance => "variance",
            Suite::Limit => "limit",
            Suite::All => "all",
        }
    }
}

/// Runs one suite, or all three with suite-default statistics.
pub fn run_suite(suite: Suite, cfg: &ExperimentConfig) -> Result<SpectralExperimentReport> {
    match suite {
        Suite::Inheritance => run_inheritance(cfg),
        Suite::Variance => run_variance_check(cfg),
        Suite::Limit => run_limit_demo(cfg),
        Suite::All => {
            let start = Instant::now();
            let defaults = ExperimentConfig {
                statistics: Vec::new(),
                ..cfg.clone()
            };
            let mut results = inheritance_results(&defaults)?;
            results.extend(variance_results(&defaults)?);
            results.extend(limit_results(&defaults)?);
            Ok(SpectralExperimentReport::assemble(
                "all", cfg, results, start,
            ))
        }
    }
}

pub fn report_to_json(r: &SpectralExperimentReport) -> Result<String> {
    let mut s = serde_json::to_string_pretty(r)?;
    s.push('\n');
    Ok(s)
}

pub fn write_report(r: &SpectralExperimentReport, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, report_to_json(r)?)?;
    Ok(())
}

pub fn read_report(path: impl AsRef<Path>) -> Result<SpectralExperimentReport> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

/// Parses `p/q`, an integer, or a decimal such as `-1.25e-3`, exactly.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let t = token.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: num_bigint::BigInt = p.trim().parse().ok()?;
        let q: num_bigint::BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let numer: num_bigint::BigInt = all_digits.parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = num_bigint::BigInt::from(10);
    let mut value = Rational::from_integer(numer);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if negative { -value } else { value })
}

/// Parses a population: numbers separated by commas and/or newlines, `#`
/// starts a comment, blank lines are ignored.
pub fn parse_population(text: &str) -> Result<Sample<Rational>> {
    let mut values = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        for (tok_no, token) in content.split(',').enumerate() {
            let v = parse_rational(token).ok_or_else(|| Error::Parse {
                line: line_no + 1,
                token: tok_no + 1,
                message: format!("`{}` is not a number", token.trim()),
            })?;
            values.push(v);
        }
    }
    if values.is_empty() {
        return Err(Error::argument("population file contains no values"));
    }
    Sample::new(values)
}

pub fn read_population(path: impl AsRef<Path>) -> Result<Sample<Rational>> {
    parse_population(&std::fs::read_to_string(path)?)
}

pub const BUILTIN_NAMES: [&str; 3] = ["arange8", "symm3", "skew6"];

/// Named reference populations: `arange8` = 1..8, `symm3` = (1,2,3),
/// `skew6` = (0,0,0,1,5,9).
pub fn builtin_population(name: &str) -> Result<Sample<Rational>> {
    let values: &[i64] = match name {
        "arange8" => &[1, 2, 3, 4, 5, 6, 7, 8],
        "symm3" => &[1, 2, 3],
        "skew6" => &[0, 0, 0, 1, 5, 9],
        _ => {
            return Err(Error::argument(format!(
                "unknown builtin population `{name}` (known: {})",
                BUILTIN_NAMES.join(", ")
            )))
        }
    };
    Sample::from_integers(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::rational;

    fn p(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_population("1,2,3\n").unwrap().values(),
            &[rational(1, 1), rational(2, 1), rational(3, 1)]
        );
        assert_eq!(
            parse_population("1/3\n2/3\n").unwrap().values(),
            &[rational(1, 3), rational(2, 3)]
        );
        match parse_population("1,x,3") {
            Err(Error::Parse {
                line: 1, token: 2, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let s = parse_population("# header\n\n 0.25 , -1e2 # trailing\n3.\n").unwrap();
        assert_eq!(
            s.values(),
            &[rational(1, 4), rational(-100, 1), rational(3, 1)]
        );
        assert!(parse_population("# nothing\n").is_err());
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational(".").is_none());
        assert_eq!(
            parse_rational("0.0000001").unwrap(),
            rational(1, 10_000_000)
        );
    }

    #[test]
    fn float_display_round_trips_through_parser() {
        for v in [0.1, -2.5e-12, 1234.5678, 1e21, 3.0] {
            let r = parse_rational(&format!("{v}")).unwrap();
            assert_eq!(r.to_f64(), v);
        }
    }

    #[test]
    fn builtins() {
        assert_eq!(builtin_population("arange8").unwrap().len(), 8);
        assert_eq!(
            builtin_population("skew6").unwrap().values()[5],
            rational(9, 1)
        );
        assert!(builtin_population("nope").is_err());
    }

    #[test]
    fn jackknife_matches_direct_leave_one_out() {
        let a = [1.0, 4.0, 2.5, -1.0, 3.0, 0.5];
        let b = [2.0, -1.0, 0.0, 5.0, 1.5, 2.0];
        let (cov, se) = covariance_with_jackknife(&a, &b);
        let direct_cov = |a: &[f64], b: &[f64]| {
            let n = a.len() as f64;
            let ma = a.iter().sum::<f64>() / n;
            let mb = b.iter().sum::<f64>() / n;
            a.iter()
                .zip(b)
                .map(|(x, y)| (x - ma) * (y - mb))
                .sum::<f64>()
                / (n - 1.0)
        };
        assert!((cov - direct_cov(&a, &b)).abs() < 1e-12);
        let n = a.len();
        let lo: Vec<f64> = (0..n)
            .map(|i| {
                let aa: Vec<f64> = (0..n).filter(|&j| j != i).map(|j| a[j]).collect();
                let bb: Vec<f64> = (0..n).filter(|&j| j != i).map(|j| b[j]).collect();
                direct_cov(&aa, &bb)
            })
            .collect();
        let m = lo.iter().sum::<f64>() / n as f64;
        let se_direct = (lo.iter().map(|v| (v - m) * (v - m)).sum::<f64>() * (n as f64 - 1.0)
            / n as f64)
            .sqrt();
        assert!((se - se_direct).abs() < 1e-12);
    }

    #[test]
    fn linear_forms_match_direct_evaluation() {
        let y = Sample::new(vec![0.3, -1.2, 2.0, 0.7, 1.1]).unwrap();
        let ps = power_sums(&y, 3).unwrap();
        for lambda in enumerate_partitions(3).unwrap() {
            let k = spectral_k_linear(&lambda, 5).unwrap().eval(&ps);
            assert!((k - spectral_kstat(&lambda, &y).unwrap()).abs() < 1e-10);
            let l = spectral_l_linear(&lambda, 5).unwrap().eval(&ps);
            assert!((l - generalized_polykay_l(&lambda, &y).unwrap()).abs() < 1e-10);
            let c = classical_k_linear(&lambda, 5).unwrap().eval(&ps);
            assert!((c - crate::classical_stats::k_statistic(&lambda, &y).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn semicircle_quantiles() {
        let q = Law::Semicircle.midpoint_quantiles(4);
        assert!((q[0] + q[3]).abs() < 1e-12 && (q[1] + q[2]).abs() < 1e-12);
        assert!((Law::Semicircle.quantile(0.5)).abs() < 1e-12);
        assert!((Law::Uniform.quantile(0.25) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn config_validation() {
        let x = builtin_population("symm3").unwrap();
        assert!(run_inheritance(&ExperimentConfig::new(x.clone(), 4, 200, 1)).is_err());
        assert!(run_inheritance(&ExperimentConfig::new(x.clone(), 2, 10, 1)).is_err());
        let cfg = ExperimentConfig::new(x, 2, 200, 1)
            .with_statistics(vec![StatisticSpec::new(StatKind::SpectralK, p(&[3]))]);
        assert!(matches!(
            run_inheritance(&cfg),
            Err(Error::DegreeExceedsSampleSize { .. })
        ));
    }

    #[test]
    fn full_sample_is_exact() {
        let x = builtin_population("skew6").unwrap();
        let r = run_inheritance(&ExperimentConfig::new(x.clone(), 6, 100, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let v = run_variance_check(&ExperimentConfig::new(x, 6, 100, 3)).unwrap();
        assert_eq!(v.verdict, Verdict::Pass);
        for row in &v.results {
            assert_eq!(row.target, 0.0);
            assert!(row.estimate.abs() < 1e-9);
        }
    }

    #[test]
    fn config_json_round_trip() {
        let cfg = ExperimentConfig::new(parse_population("1/3,2,5").unwrap(), 2, 500, 9)
            .with_statistics(vec![StatisticSpec::new(StatKind::SpectralL, p(&[1, 1]))]);
        let json = serde_json::to_string(&cfg).unwrap();
        assert!(json.contains("\"1/3\""));
        assert!(json.contains("\"spectral_l\""));
        let back: ExperimentConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cfg);
    }
}
