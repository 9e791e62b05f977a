//! Spectral k-statistics `𝔎_λ`, the raw class values `κ̃_λ`, generalized
//! polykays `l_λ`, their normalized versions, and conversions between trace
//! moments and cumulants of trace powers.
//!
//! For a spectrum `y` of size `m`, `κ̃ = μ(I_m)^{-1} · μ(y)` in the class
//! algebra of `S_i`, where `μ(y)(λ) = Π_j S_{λ_j}(y)`. Since `μ(I_m)^{-1}` only
//! depends on `(m, i)`, each `κ̃_λ` is a fixed rational combination of power-sum
//! products; [`SpectralKernel`] caches those coefficients.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::classical_stats::{k_statistic_from_power_sums, power_sums, PowerSums, Sample};
use crate::combinat::{
    check_degree, coarsenings_with_moebius, coeff_d, cycle_prefactor, enumerate_partitions,
    factorial, IntegerPartition, Rational, SetPartition,
};
use crate::error::{Error, Result};
use crate::group_algebra::{
    class_index, classes, convolution_table, convolve, invert, mu_identity, solve_exact,
    ClassFunction,
};
use crate::scalar::Scalar;

/// Largest degree accepted by the spectral statistics.
pub const SPECTRAL_DEGREE_CAP: usize = 6;

fn check_spectral(i: usize, m: usize) -> Result<()> {
    check_degree("spectral statistic degree", i, SPECTRAL_DEGREE_CAP)?;
    if i > m {
        return Err(Error::DegreeExceedsSampleSize { degree: i, size: m });
    }
    Ok(())
}

fn mu_values<T: Scalar>(p: &PowerSums<T>, i: usize) -> Result<Vec<T>> {
    p.require(i)?;
    Ok(classes(i)?.iter().map(|c| p.product(c)).collect())
}

/// `μ(y)`: the class function `λ ↦ Π_j S_{λ_j}`.
pub fn mu_of_spectrum(p: &PowerSums<Rational>, i: usize) -> Result<ClassFunction> {
    ClassFunction::from_values(i, mu_values(p, i)?)
}

/// `κ̃(y) = μ(I_m)^{-1} · μ(y)` computed directly in the class algebra.
pub fn spectral_class_function(x: &Sample<Rational>, i: usize) -> Result<ClassFunction> {
    let m = x.len();
    check_spectral(i, m)?;
    let inverse = invert(&mu_identity(m, i)?)
        .map_err(|_| Error::DegreeExceedsSampleSize { degree: i, size: m })?;
    convolve(&inverse, &mu_of_spectrum(&power_sums(x, i)?, i)?)
}

/// Power-sum coefficients of every `κ̃_λ` of degree `i` for spectra of size `m`.
#[derive(Debug)]
pub struct SpectralKernel {
    m: usize,
    degree: usize,
    /// `coeffs[λ][ω]`: coefficient of `Π_j S_{ω_j}` in `κ̃_λ`.
    coeffs: Vec<Vec<Rational>>,
}

impl SpectralKernel {
    pub fn new(m: usize, degree: usize) -> Result<Self> {
        check_spectral(degree, m)?;
        let inverse = invert(&mu_identity(m, degree)?)
            .map_err(|_| Error::DegreeExceedsSampleSize { degree, size: m })?;
        let table = convolution_table(degree)?;
        let k = inverse.values().len();
        let mut coeffs = vec![vec![Rational::zero(); k]; k];
        for (lambda, row) in coeffs.iter_mut().enumerate() {
            for (omega, entry) in row.iter_mut().enumerate() {
                for (rho, g) in inverse.values().iter().enumerate() {
                    let n = table.count(rho, omega, lambda);
                    if n != 0 {
                        *entry += g * Rational::from_integer(n.into());
                    }
                }
            }
        }
        Ok(Self { m, degree, coeffs })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn classes(&self) -> &'static [IntegerPartition] {
        classes(self.degree).expect("degree checked at construction")
    }

    /// Coefficients of `κ̃_λ`, aligned with [`Self::classes`].
    pub fn coefficients(&self, lambda: &IntegerPartition) -> Result<&[Rational]> {
        if lambda.weight() != self.degree {
            return Err(Error::argument(format!(
                "class {lambda} does not have degree {}",
                self.degree
            )));
        }
        Ok(&self.coeffs[class_index(lambda)?])
    }

    /// The coefficient matrix converted to `T`, for repeated evaluation.
    pub fn coefficients_as<T: Scalar>(&self) -> Vec<Vec<T>> {
        self.coeffs
            .iter()
            .map(|row| row.iter().map(T::from_rational).collect())
            .collect()
    }

    /// All `κ̃_λ` of this degree, aligned with [`Self::classes`].
    pub fn evaluate<T: Scalar>(&self, p: &PowerSums<T>) -> Result<Vec<T>> {
        if p.n() != self.m {
            return Err(Error::argument(format!(
                "kernel for size {} applied to a spectrum of size {}",
                self.m,
                p.n()
            )));
        }
        let mu = mu_values(p, self.degree)?;
        Ok(apply(&self.coefficients_as(), &mu))
    }
}

pub(crate) fn apply<T: Scalar>(coeffs: &[Vec<T>], mu: &[T]) -> Vec<T> {
    coeffs
        .iter()
        .map(|row| {
            row.iter()
                .zip(mu)
                .fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone())
        })
        .collect()
}

type KernelCache = Mutex<HashMap<(usize, usize), Arc<SpectralKernel>>>;

/// Cached [`SpectralKernel::new`].
pub fn kernel(m: usize, degree: usize) -> Result<Arc<SpectralKernel>> {
    static CACHE: OnceLock<KernelCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(k) = cache.lock().unwrap().get(&(m, degree)) {
        return Ok(k.clone());
    }
    let built = Arc::new(SpectralKernel::new(m, degree)?);
    Ok(cache
        .lock()
        .unwrap()
        .entry((m, degree))
        .or_insert(built)
        .clone())
}

/// All raw values `κ̃_λ`, `λ ⊢ i`, in [`enumerate_partitions`] order; the
/// spectrum size is `p.n()`.
pub fn spectral_kappas_from_power_sums<T: Scalar>(i: usize, p: &PowerSums<T>) -> Result<Vec<T>> {
    check_spectral(i, p.n())?;
    kernel(p.n(), i)?.evaluate(p)
}

pub fn spectral_kappa_from_power_sums<T: Scalar>(
    lambda: &IntegerPartition,
    p: &PowerSums<T>,
) -> Result<T> {
    let i = lambda.weight();
    check_spectral(i, p.n())?;
    let values = spectral_kappas_from_power_sums(i, p)?;
    Ok(values[class_index(lambda)?].clone())
}

/// Raw class value `κ̃_λ(x)`, without the cycle prefactor.
pub fn spectral_kappa<T: Scalar>(lambda: &IntegerPartition, x: &Sample<T>) -> Result<T> {
    check_spectral(lambda.weight(), x.len())?;
    spectral_kappa_from_power_sums(lambda, &power_sums(x, lambda.weight())?)
}

pub fn spectral_kstat_from_power_sums<T: Scalar>(
    lambda: &IntegerPartition,
    p: &PowerSums<T>,
) -> Result<T> {
    let prefactor = T::from_rational(&Rational::from_integer(cycle_prefactor(lambda)));
    Ok(prefactor * spectral_kappa_from_power_sums(lambda, p)?)
}

/// The spectral k-statistic `𝔎_λ(x) = (1!)^{r_2}(2!)^{r_3}⋯ κ̃_λ(x)`.
pub fn spectral_kstat<T: Scalar>(lambda: &IntegerPartition, x: &Sample<T>) -> Result<T> {
    check_spectral(lambda.weight(), x.len())?;
    spectral_kstat_from_power_sums(lambda, &power_sums(x, lambda.weight())?)
}

/// `l_λ = Σ_μ coef_μ κ̃_μ`: the Möbius sum over coarsenings of a set partition
/// of class `λ`, grouped by the class of each coarsening.
pub fn polykay_l_coefficients(
    lambda: &IntegerPartition,
) -> Result<Vec<(IntegerPartition, Rational)>> {
    check_degree(
        "spectral statistic degree",
        lambda.weight(),
        SPECTRAL_DEGREE_CAP,
    )?;
    let mut out: Vec<(IntegerPartition, Rational)> = Vec::new();
    for (tau, mu) in coarsenings_with_moebius(&SetPartition::of_class(lambda)) {
        let class = tau.class();
        match out.iter_mut().find(|(c, _)| *c == class) {
            Some((_, total)) => *total += mu,
            None => out.push((class, mu)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    let order = classes(lambda.weight())?;
    out.sort_by_key(|(c, _)| order.iter().position(|o| o == c));
    Ok(out)
}

pub fn generalized_polykay_l_from_power_sums<T: Scalar>(
    lambda: &IntegerPartition,
    p: &PowerSums<T>,
) -> Result<T> {
    let i = lambda.weight();
    let kappas = spectral_kappas_from_power_sums(i, p)?;
    let mut total = T::zero();
    for (class, c) in polykay_l_coefficients(lambda)? {
        total = total + T::from_rational(&c) * kappas[class_index(&class)?].clone();
    }
    Ok(total)
}

/// Generalized (transformed) spectral polykay `l_λ(x)`.
pub fn generalized_polykay_l<T: Scalar>(lambda: &IntegerPartition, x: &Sample<T>) -> Result<T> {
    check_spectral(lambda.weight(), x.len())?;
    generalized_polykay_l_from_power_sums(lambda, &power_sums(x, lambda.weight())?)
}

/// Which raw statistic gets normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalizedKind {
    /// `m^{i−l(λ)} κ̃_λ`
    KStatistic,
    /// `m^{i−l(λ)} l_λ`
    Polykay,
}

/// `m^{i − l(λ)}`.
pub fn normalization_factor<T: Scalar>(lambda: &IntegerPartition, m: usize) -> T {
    T::from_i64(m as i64).powi((lambda.weight() - lambda.len()) as u32)
}

pub fn normalized_spectral_from_power_sums<T: Scalar>(
    lambda: &IntegerPartition,
    p: &PowerSums<T>,
    kind: NormalizedKind,
) -> Result<T> {
    let raw = match kind {
        NormalizedKind::KStatistic => spectral_kappa_from_power_sums(lambda, p)?,
        NormalizedKind::Polykay => generalized_polykay_l_from_power_sums(lambda, p)?,
    };
    Ok(normalization_factor::<T>(lambda, p.n()) * raw)
}

pub fn normalized_spectral<T: Scalar>(
    lambda: &IntegerPartition,
    x: &Sample<T>,
    kind: NormalizedKind,
) -> Result<T> {
    check_spectral(lambda.weight(), x.len())?;
    normalized_spectral_from_power_sums(lambda, &power_sums(x, lambda.weight())?, kind)
}

/// How a [`SpectralStatistic`] value is scaled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `κ̃_λ`
    Raw,
    /// `𝔎_λ`
    Polykay,
    /// `m^{i−l(λ)} κ̃_λ`
    Normalized,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralStatistic<T> {
    pub class: IntegerPartition,
    pub normalization: Normalization,
    pub value: T,
}

impl<T: Scalar> SpectralStatistic<T> {
    pub fn compute(
        lambda: &IntegerPartition,
        x: &Sample<T>,
        normalization: Normalization,
    ) -> Result<Self> {
        let value = match normalization {
            Normalization::Raw => spectral_kappa(lambda, x)?,
            Normalization::Polykay => spectral_kstat(lambda, x)?,
            Normalization::Normalized => {
                normalized_spectral(lambda, x, NormalizedKind::KStatistic)?
            }
        };
        Ok(Self {
            class: lambda.clone(),
            normalization,
            value,
        })
    }

    pub fn degree(&self) -> usize {
        self.class.weight()
    }
}

/// The published power-sum formulas for `𝔎_λ`, `|λ| ≤ 4`, transcribed as
/// printed. Two of them disagree with [`spectral_kstat`]: `(4)` is printed with
/// an extra factor `1/n`, and `(1²,2)` with the wrong sign on `S_2²`.
pub fn closed_form_kstat<T: Scalar>(lambda: &IntegerPartition, p: &PowerSums<T>) -> Result<T> {
    let i = lambda.weight();
    if i > 4 {
        return Err(Error::Capacity {
            what: "closed-form degree",
            requested: i,
            cap: 4,
        });
    }
    if p.n() < i {
        return Err(Error::argument(format!(
            "closed form of degree {i} has a zero denominator at n = {}",
            p.n()
        )));
    }
    p.require(i)?;
    let c = T::from_i64;
    let n = p.n_scalar();
    let n2 = n.clone() * n.clone();
    let s = |r: usize| p.s(r).clone();
    let (s1, s2) = (s(1), s(2));
    let d2 = n.clone() * (n2.clone() - c(1));
    let v = match i {
        1 => s1 / n,
        2 => match lambda.parts() {
            [2] => (n * s2 - s1.powi(2)) / d2,
            _ => (n * s1.powi(2) - s2) / d2,
        },
        3 => {
            let s3 = s(3);
            let d3 = d2 * (n2.clone() - c(4));
            match lambda.parts() {
                [3] => c(2) * (c(2) * s1.powi(3) - c(3) * n.clone() * s1 * s2 + n2 * s3) / d3,
                [2, 1] => {
                    (-c(2) * n.clone() * s3 + (n2 + c(2)) * s1.clone() * s2 - n * s1.powi(3)) / d3
                }
                _ => (s1.powi(3) * (n2 - c(2)) - c(3) * n * s1 * s2 + c(4) * s3) / d3,
            }
        }
        _ => {
            let (s3, s4) = (s(3), s(4));
            let d4_n = n.clone() * (n2.clone() - c(1)) * (n2.clone() - c(4)) * (n2.clone() - c(9));
            let d4 = n.clone() * d4_n.clone();
            let n4 = n2.clone() * n2.clone();
            let s1s3 = s1.clone() * s3;
            let s22 = s2.powi(2);
            let s112 = s1.powi(2) * s2;
            let s14 = s1.powi(4);
            match lambda.parts() {
                [4] => {
                    c(6) * (s4 * (n2.clone() * n.clone() + n.clone())
                        - c(4) * s1s3 * (n2.clone() + c(1))
                        + s22 * (c(3) - c(2) * n2)
                        + c(10) * n * s112
                        - c(5) * s14)
                        / d4
                }
                [3, 1] => {
                    c(2) * (-c(3) * n.clone() * s4 * (n2.clone() + c(1))
                        + s1s3 * (c(12) + c(3) * n2.clone() + n4)
                        + s22 * (c(6) * n2.clone() - c(9))
                        - c(3) * n * s112 * (n2.clone() + c(1)))
                        / d4.clone()
                        + c(2) * (c(2) * n2 - c(3)) * s14 / d4
                }
                [2, 2] => {
                    (c(2) * s4 * (c(3) * n.clone() - c(2) * n2.clone() * n.clone())
                        + c(4) * s1s3 * (c(4) * n2.clone() - c(6))
                        + s22 * (c(18) + n4 - c(6) * n2.clone())
                        - c(2) * n * s112 * (n2.clone() + c(6)))
                        / d4.clone()
                        + (n2 + c(6)) * s14 / d4
                }
                [2, 1, 1] => {
                    (c(10) * n.clone() * s4 - c(4) * s1s3 * (n2.clone() + c(1))
                        + s22 * (n2.clone() + c(6))
                        + n * s112 * (n2.clone() + c(1))
                        + (c(4) - n2) * s14)
                        / d4_n
                }
                _ => {
                    (-c(30) * n.clone() * s4
                        + c(4) * s1s3 * (c(4) * n2.clone() - c(6))
                        + s22 * (c(3) * n2.clone() + c(18))
                        + c(6) * n * s112 * (c(4) - n2.clone()))
                        / d4.clone()
                        + (c(6) - c(8) * n2 + n4) * s14 / d4
                }
            }
        }
    };
    Ok(v)
}

/// The published k-statistic forms attached to the degree ≤ 3 closed forms,
/// e.g. `𝔎_(2) = k_(2)/(n+1)`. Returns `None` where no form was printed. The
/// forms given for `(1²)` and `(1,2)` do not agree with the statistic.
pub fn closed_form_k_annotation<T: Scalar>(
    lambda: &IntegerPartition,
    p: &PowerSums<T>,
) -> Result<Option<T>> {
    if lambda.weight() > 3 {
        return Ok(None);
    }
    let k = |parts: &[usize]| {
        k_statistic_from_power_sums(&IntegerPartition::new(parts.to_vec()).unwrap(), p)
    };
    let c = T::from_i64;
    let n = p.n_scalar();
    let n1 = n.clone() + c(1);
    let n12 = n1.clone() * (n.clone() + c(2));
    let v = match lambda.parts() {
        [1] => k(&[1])?,
        [2] => k(&[2])? / n1,
        [1, 1] => k(&[1, 1])? / n1,
        [3] => c(2) * k(&[3])? / n12,
        [2, 1] => (c(2) * k(&[2, 1])? - n * k(&[1])? * k(&[2])?) / n12,
        _ => {
            (c(2) * k(&[1, 1, 1])? - c(3) * k(&[1])? * k(&[2])?
                + n.clone() * (n + c(3)) * k(&[1])?.powi(3))
                / n12
        }
    };
    Ok(Some(v))
}

/// Power-sum products `Π_j S_{ω_j}`, one per class `ω ⊢ i`, at fixed points
/// `S_r = prime_r^q` (`q = 0, 1, …`). Distinct classes get distinct prime
/// products, so the evaluation matrix is a nonsingular Vandermonde matrix.
fn interpolation_points(n: usize, i: usize) -> Vec<PowerSums<Rational>> {
    const PRIMES: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    let k = classes(i).map(|c| c.len()).unwrap_or(0);
    (0..k)
        .map(|q| {
            let sums = PRIMES[..i]
                .iter()
                .map(|&b| num_traits::pow(Rational::from_integer(b.into()), q))
                .collect();
            PowerSums::from_sums(n, sums).expect("n ≥ 1")
        })
        .collect()
}

/// Recovers the power-sum coefficient vector (over [`classes`]`(i)`) of a
/// homogeneous degree-`i` symmetric function given as a black box.
pub fn power_sum_coefficients(
    n: usize,
    i: usize,
    f: impl Fn(&PowerSums<Rational>) -> Result<Rational>,
) -> Result<Vec<Rational>> {
    let basis = classes(i)?;
    let points = interpolation_points(n, i);
    let a: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| basis.iter().map(|c| p.product(c)).collect())
        .collect();
    let b = points.iter().map(f).collect::<Result<Vec<_>>>()?;
    solve_exact(&a, &b).ok_or_else(|| Error::argument("interpolation system is singular"))
}

/// Power-sum coefficients of `𝔎_λ` at spectrum size `n`, aligned with
/// [`classes`]`(|λ|)`.
pub fn kstat_power_sum_coefficients(lambda: &IntegerPartition, n: usize) -> Result<Vec<Rational>> {
    let prefactor = Rational::from_integer(cycle_prefactor(lambda));
    Ok(kernel(n, lambda.weight())?
        .coefficients(lambda)?
        .iter()
        .map(|c| c * &prefactor)
        .collect())
}

/// `E[(Tr Y)^i] = Σ_{λ ⊢ i} d_λ m^{l(λ)} Π_j c_{λ_j}`; `c[j-1]` is `c_j`.
pub fn trace_moments_from_scaled_cumulants<T: Scalar>(c: &[T], m: usize, i: usize) -> Result<T> {
    if i == 0 || c.len() < i {
        return Err(Error::argument(format!(
            "trace moment of order {i} needs c_1..c_{i}, got {} values",
            c.len()
        )));
    }
    let mt = T::from_i64(m as i64);
    let mut total = T::zero();
    for lambda in enumerate_partitions(i)? {
        let term = lambda.parts().iter().fold(
            T::from_rational(&coeff_d(&lambda)) * mt.powi(lambda.len() as u32),
            |acc, &p| acc * c[p - 1].clone(),
        );
        total = total + term;
    }
    Ok(total)
}

/// Inverse of [`trace_moments_from_scaled_cumulants`]: `moments[t-1]` is
/// `E[(Tr Y)^t]`, and the result holds `c_1, …, c_d`.
pub fn scaled_cumulants_from_trace_moments<T: Scalar>(moments: &[T], m: usize) -> Result<Vec<T>> {
    if m == 0 {
        return Err(Error::argument("matrix order must be positive"));
    }
    let mt = T::from_i64(m as i64);
    let mut c: Vec<T> = Vec::with_capacity(moments.len());
    for (idx, moment) in moments.iter().enumerate() {
        let i = idx + 1;
        // Every other partition only involves c_1..c_{i-1}; λ = (i) contributes m c_i.
        c.push(T::zero());
        let rest = trace_moments_from_scaled_cumulants(&c, m, i)?;
        c[idx] = (moment.clone() - rest) / mt.clone();
    }
    Ok(c)
}

/// `Π_j c_{λ_j}` from trace moments: each factor is
/// `Σ_{η ⊢ λ_j} (−1)^{ν−1} (ν−1)! d_η / m · Π_t M_{η_t}` with `ν = l(η)` and
/// `M_t = trace_moments[t-1] = E[(Tr Y)^t]`.
pub fn cumulant_products_from_trace_moments<T: Scalar>(
    lambda: &IntegerPartition,
    trace_moments: &[T],
    m: usize,
) -> Result<T> {
    if m == 0 {
        return Err(Error::argument("matrix order must be positive"));
    }
    let needed = lambda.parts()[0];
    if trace_moments.len() < needed {
        return Err(Error::argument(format!(
            "cumulant product {lambda} needs trace moments up to order {needed}, got {}",
            trace_moments.len()
        )));
    }
    let mt = T::from_i64(m as i64);
    let mut product = T::one();
    for &part in lambda.parts() {
        let mut factor = T::zero();
        for eta in enumerate_partitions(part)? {
            let nu = eta.len();
            let mut w = Rational::from_integer(factorial(nu - 1)) * coeff_d(&eta);
            if nu % 2 == 0 {
                w = -w;
            }
            let g = eta
                .parts()
                .iter()
                .fold(T::one(), |acc, &t| acc * trace_moments[t - 1].clone());
            factor = factor + T::from_rational(&w) * g / mt.clone();
        }
        product = product * factor;
    }
    Ok(product)
}

/// Conditional second moments of low-order spectral statistics given the
/// population.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionalMoment {
    /// `var(𝔎_(1)(y) | x)`
    VarK1,
    /// `cov(𝔎_(1)(y), 𝔎_(2)(y) | x)`
    CovK1K2,
    /// `var(𝔎_(2)(y) | x)`
    VarK2,
}

impl ConditionalMoment {
    pub const ALL: [ConditionalMoment; 3] = [
        ConditionalMoment::VarK1,
        ConditionalMoment::CovK1K2,
        ConditionalMoment::VarK2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConditionalMoment::VarK1 => "var_k1",
            ConditionalMoment::CovK1K2 => "cov_k1_k2",
            ConditionalMoment::VarK2 => "var_k2",
        }
    }

    /// Smallest spectral sample size `m` for which both statistics exist.
    pub fn min_m(self) -> usize {
        match self {
            ConditionalMoment::VarK1 => 1,
            _ => 2,
        }
    }

    /// Smallest population size needed for the formula's ingredients.
    pub fn min_n(self) -> usize {
        match self {
            ConditionalMoment::VarK1 => 2,
            ConditionalMoment::CovK1K2 => 3,
            ConditionalMoment::VarK2 => 4,
        }
    }
}

/// Closed forms for the conditional variance/covariance of spectral samples of
/// size `m` drawn from `x`. The degree-3 and degree-4 terms use the raw class
/// values `κ̃_(3)`, `κ̃_(4)`:
///
/// - `var 𝔎_(1) = 𝔎_(2)(x) (1/m − 1/n)`
/// - `cov(𝔎_(1), 𝔎_(2)) = 2 κ̃_(3)(x) (1/m − 1/n)`
/// - `var 𝔎_(2) = 2 𝔎_(2²)(x) (1/(m²−1) − 1/(n²−1))
///   + 2 κ̃_(4)(x) (n−m)(2m²n² − 3n² − 3m² − mn + 3) / (nm(m²−1)(n²−1))`
pub fn conditional_moment_formulas<T: Scalar>(
    which: ConditionalMoment,
    x: &Sample<T>,
    m: usize,
) -> Result<T> {
    let n = x.len();
    if m > n {
        return Err(Error::argument(format!(
            "sample size m = {m} exceeds population size n = {n}"
        )));
    }
    if m < which.min_m() {
        return Err(Error::argument(format!(
            "{} needs m ≥ {}",
            which.name(),
            which.min_m()
        )));
    }
    if n < which.min_n() {
        return Err(Error::DegreeExceedsSampleSize {
            degree: which.min_n(),
            size: n,
        });
    }
    let p = power_sums(x, 4.min(n))?;
    let (mt, nt) = (T::from_i64(m as i64), T::from_i64(n as i64));
    let one = T::one();
    let gap = one.clone() / mt.clone() - one.clone() / nt.clone();
    let part = |parts: &[usize]| IntegerPartition::new(parts.to_vec()).unwrap();
    let v = match which {
        ConditionalMoment::VarK1 => spectral_kstat_from_power_sums(&part(&[2]), &p)? * gap,
        ConditionalMoment::CovK1K2 => {
            T::from_i64(2) * spectral_kappa_from_power_sums(&part(&[3]), &p)? * gap
        }
        ConditionalMoment::VarK2 => {
            let c = T::from_i64;
            let (m2, n2) = (mt.clone() * mt.clone(), nt.clone() * nt.clone());
            let k22 = spectral_kstat_from_power_sums(&part(&[2, 2]), &p)?;
            let k4 = spectral_kappa_from_power_sums(&part(&[4]), &p)?;
            let first =
                c(2) * k22 * (one.clone() / (m2.clone() - c(1)) - one / (n2.clone() - c(1)));
            let poly = c(2) * m2.clone() * n2.clone()
                - c(3) * n2.clone()
                - c(3) * m2.clone()
                - mt.clone() * nt.clone()
                + c(3);
            let den = nt.clone() * mt.clone() * (m2 - c(1)) * (n2 - c(1));
            first + c(2) * k4 * (nt - mt) * poly / den
        }
    };
    Ok(v)
}

/// Every `𝔎_λ` of degree `1..=d` on `x`, in degree then class order.
pub fn all_spectral_kstats<T: Scalar>(
    x: &Sample<T>,
    d: usize,
) -> Result<Vec<(IntegerPartition, T)>> {
    statistics_up_to(x, d, spectral_kstat_from_power_sums)
}

/// Every `l_λ` of degree `1..=d` on `x`.
pub fn all_generalized_polykays<T: Scalar>(
    x: &Sample<T>,
    d: usize,
) -> Result<Vec<(IntegerPartition, T)>> {
    statistics_up_to(x, d, generalized_polykay_l_from_power_sums)
}

fn statistics_up_to<T: Scalar>(
    x: &Sample<T>,
    d: usize,
    f: impl Fn(&IntegerPartition, &PowerSums<T>) -> Result<T>,
) -> Result<Vec<(IntegerPartition, T)>> {
    check_spectral(d, x.len())?;
    let p = power_sums(x, d)?;
    let mut out = Vec::new();
    for i in 1..=d {
        for lambda in enumerate_partitions(i)? {
            let v = f(&lambda, &p)?;
            out.push((lambda, v));
        }
    }
    Ok(out)
}
