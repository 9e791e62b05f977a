//! Power sums, augmented symmetric functions, and Fisher/Tukey k-statistics
//! up to degree 4. These are the statistics inherited under simple random
//! sampling and serve as comparators for the spectral ones.

use crate::combinat::{
    coarsenings_with_moebius, rational, IntegerPartition, Rational, SetPartition,
};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite set of real numbers `x_1, …, x_n` (`n ≥ 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct Sample<T> {
    values: Vec<T>,
}

impl<T: Scalar> Sample<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::argument("a sample needs at least one value"));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Sample<U> {
        Sample {
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn to_f64(&self) -> Sample<f64> {
        self.map(Scalar::to_f64)
    }
}

impl Sample<Rational> {
    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| rational(v, 1)).collect())
    }
}

/// `(n; S_1, …, S_d)` with `S_r = Σ_j x_j^r`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSums<T> {
    n: usize,
    sums: Vec<T>,
}

impl<T: Scalar> PowerSums<T> {
    /// Builds power sums directly; `sums[r-1]` is `S_r`. Useful for evaluating
    /// polynomial identities at arbitrary points.
    pub fn from_sums(n: usize, sums: Vec<T>) -> Result<Self> {
        if n == 0 || sums.is_empty() {
            return Err(Error::argument("power sums need n ≥ 1 and d ≥ 1"));
        }
        Ok(Self { n, sums })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.sums.len()
    }

    /// `S_r` for `1 ≤ r ≤ d`.
    pub fn s(&self, r: usize) -> &T {
        &self.sums[r - 1]
    }

    pub fn sums(&self) -> &[T] {
        &self.sums
    }

    pub(crate) fn require(&self, degree: usize) -> Result<()> {
        if degree > self.sums.len() {
            return Err(Error::argument(format!(
                "power sums up to S_{degree} needed, only S_{} available",
                self.sums.len()
            )));
        }
        Ok(())
    }

    /// `Π_j S_{λ_j}`.
    pub fn product(&self, lambda: &IntegerPartition) -> T {
        lambda
            .parts()
            .iter()
            .fold(T::one(), |acc, &p| acc * self.s(p).clone())
    }

    pub fn n_scalar(&self) -> T {
        T::from_i64(self.n as i64)
    }
}

pub fn power_sums<T: Scalar>(x: &Sample<T>, d: usize) -> Result<PowerSums<T>> {
    if d == 0 {
        return Err(Error::argument("power sum degree must be positive"));
    }
    let mut sums = vec![T::zero(); d];
    for v in x.values() {
        let mut pow = T::one();
        for s in sums.iter_mut() {
            pow = pow * v.clone();
            *s = s.clone() + pow.clone();
        }
    }
    PowerSums::from_sums(x.len(), sums)
}

/// `(n)_r = n (n−1) ⋯ (n−r+1)`.
pub(crate) fn falling<T: Scalar>(n: usize, r: usize) -> T {
    (0..r).fold(T::one(), |acc, j| acc * T::from_i64(n as i64 - j as i64))
}

/// Augmented symmetric function `Σ_{distinct j_1,…,j_l} x_{j_1}^{λ_1} ⋯ x_{j_l}^{λ_l}`,
/// from power sums by Möbius inversion over set partitions of the index positions.
pub fn augmented_from_power_sums<T: Scalar>(
    lambda: &IntegerPartition,
    p: &PowerSums<T>,
) -> Result<T> {
    if lambda.len() > p.n() {
        return Err(Error::argument(format!(
            "augmented function {lambda} needs at least {} values, sample has {}",
            lambda.len(),
            p.n()
        )));
    }
    p.require(lambda.weight())?;
    let parts = lambda.parts();
    let mut total = T::zero();
    for (tau, mu) in coarsenings_with_moebius(&SetPartition::bottom(parts.len())) {
        let term = tau
            .blocks()
            .iter()
            .fold(T::from_rational(&mu), |acc, block| {
                let exponent: usize = block.iter().map(|&j| parts[j - 1]).sum();
                acc * p.s(exponent).clone()
            });
        total = total + term;
    }
    Ok(total)
}

pub fn augmented<T: Scalar>(lambda: &IntegerPartition, x: &Sample<T>) -> Result<T> {
    augmented_from_power_sums(lambda, &power_sums(x, lambda.weight())?)
}

/// `ã_λ = a_λ / (n)_{l(λ)}`.
pub fn augmented_normalized_from_power_sums<T: Scalar>(
    lambda: &IntegerPartition,
    p: &PowerSums<T>,
) -> Result<T> {
    Ok(augmented_from_power_sums(lambda, p)? / falling(p.n(), lambda.len()))
}

pub fn augmented_normalized<T: Scalar>(lambda: &IntegerPartition, x: &Sample<T>) -> Result<T> {
    augmented_normalized_from_power_sums(lambda, &power_sums(x, lambda.weight())?)
}

/// Largest degree with a k-statistic/polykay formula.
pub const CLASSICAL_DEGREE_CAP: usize = 4;

/// Fisher's k-statistics and Tukey's polykays as fixed combinations of the
/// normalized augmented symmetric functions.
pub fn k_statistic_from_power_sums<T: Scalar>(
    lambda: &IntegerPartition,
    p: &PowerSums<T>,
) -> Result<T> {
    let i = lambda.weight();
    if i > CLASSICAL_DEGREE_CAP {
        return Err(Error::Capacity {
            what: "classical k-statistic degree",
            requested: i,
            cap: CLASSICAL_DEGREE_CAP,
        });
    }
    if i > p.n() {
        return Err(Error::DegreeExceedsSampleSize {
            degree: i,
            size: p.n(),
        });
    }
    let a = |parts: &[usize]| {
        augmented_normalized_from_power_sums(&IntegerPartition::new(parts.to_vec()).unwrap(), p)
    };
    let c = T::from_i64;
    let v = match lambda.parts() {
        [1] => a(&[1])?,
        [1, 1] => a(&[1, 1])?,
        [2] => a(&[2])? - a(&[1, 1])?,
        [1, 1, 1] => a(&[1, 1, 1])?,
        [2, 1] => a(&[2, 1])? - a(&[1, 1, 1])?,
        [3] => a(&[3])? - c(3) * a(&[2, 1])? + c(2) * a(&[1, 1, 1])?,
        [1, 1, 1, 1] => a(&[1, 1, 1, 1])?,
        [2, 1, 1] => a(&[2, 1, 1])? - a(&[1, 1, 1, 1])?,
        [3, 1] => a(&[3, 1])? - c(3) * a(&[2, 1, 1])? + c(2) * a(&[1, 1, 1, 1])?,
        [2, 2] => a(&[2, 2])? - c(2) * a(&[2, 1, 1])? + a(&[1, 1, 1, 1])?,
        [4] => {
            a(&[4])? - c(4) * a(&[3, 1])? - c(3) * a(&[2, 2])? + c(12) * a(&[2, 1, 1])?
                - c(6) * a(&[1, 1, 1, 1])?
        }
        _ => unreachable!("all partitions of degree ≤ 4 are listed"),
    };
    Ok(v)
}

pub fn k_statistic<T: Scalar>(lambda: &IntegerPartition, x: &Sample<T>) -> Result<T> {
    k_statistic_from_power_sums(lambda, &power_sums(x, lambda.weight().max(1))?)
}

/// Tukey's identities expressing each polykay through products of single
/// k-statistics with coefficients in the sample size `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TukeyIdentity {
    /// `k_(1²) = k_1 k_1 − k_2/m`
    OneOne,
    /// `k_(1,2) = k_1 k_2 − k_3/m`
    OneTwo,
    /// `k_(1³) = k_1³ − 3 k_2 k_1/m + 2 k_3/m²`
    OneOneOne,
    /// `k_(1,3) = k_1 k_3 − k_4/m`
    OneThree,
    /// `k_(2²) = (m−1)/(m+1) k_2² − (m−1)/(m(m+1)) k_4`
    TwoTwo,
    /// `k_(1²,2) = k_2 k_1² − 2 k_3 k_1/m − (m−1)/(m(m+1)) k_2² + 2 k_4/(m(m+1))`
    OneOneTwo,
    /// `k_(1⁴) = k_1⁴ − 6 k_2 k_1²/m + 8 k_3 k_1/m² + 3(m−1)/(m²(m+1)) k_2² − 6 k_4/(m²(m+1))`
    OneFour,
}

impl TukeyIdentity {
    pub const ALL: [TukeyIdentity; 7] = [
        TukeyIdentity::OneOne,
        TukeyIdentity::OneTwo,
        TukeyIdentity::OneOneOne,
        TukeyIdentity::OneThree,
        TukeyIdentity::TwoTwo,
        TukeyIdentity::OneOneTwo,
        TukeyIdentity::OneFour,
    ];

    /// Identifier: the polykay on the left side, e.g. `"1^2,2"`.
    pub fn id(self) -> &'static str {
        match self {
            TukeyIdentity::OneOne => "1^2",
            TukeyIdentity::OneTwo => "1,2",
            TukeyIdentity::OneOneOne => "1^3",
            TukeyIdentity::OneThree => "1,3",
            TukeyIdentity::TwoTwo => "2^2",
            TukeyIdentity::OneOneTwo => "1^2,2",
            TukeyIdentity::OneFour => "1^4",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        let wanted = IntegerPartition::parse(id).map_err(|_| Error::UnknownIdentity(id.into()))?;
        Self::ALL
            .into_iter()
            .find(|t| t.lhs() == wanted)
            .ok_or_else(|| Error::UnknownIdentity(id.into()))
    }

    pub fn lhs(self) -> IntegerPartition {
        IntegerPartition::parse(self.id()).expect("static ids parse")
    }

    /// Right side as `(coefficient, product of single k's)`. `as_printed`
    /// selects the k_4 coefficients of the published table for the two rows
    /// where they differ from the exact identity.
    fn rhs(self, m: i64, as_printed: bool) -> Vec<(Rational, Vec<usize>)> {
        let r = rational;
        match self {
            TukeyIdentity::OneOne => vec![(r(1, 1), vec![1, 1]), (r(-1, m), vec![2])],
            TukeyIdentity::OneTwo => vec![(r(1, 1), vec![1, 2]), (r(-1, m), vec![3])],
            TukeyIdentity::OneOneOne => vec![
                (r(1, 1), vec![1, 1, 1]),
                (r(-3, m), vec![2, 1]),
                (r(2, m * m), vec![3]),
            ],
            TukeyIdentity::OneThree => vec![(r(1, 1), vec![1, 3]), (r(-1, m), vec![4])],
            TukeyIdentity::TwoTwo => {
                let k4 = if as_printed {
                    r(-1, m)
                } else {
                    r(-(m - 1), m * (m + 1))
                };
                vec![(r(m - 1, m + 1), vec![2, 2]), (k4, vec![4])]
            }
            TukeyIdentity::OneOneTwo => vec![
                (r(1, 1), vec![2, 1, 1]),
                (r(-2, m), vec![3, 1]),
                (r(-(m - 1), m * (m + 1)), vec![2, 2]),
                (r(2, m * (m + 1)), vec![4]),
            ],
            TukeyIdentity::OneFour => {
                let k4 = if as_printed {
                    r(-6 * m, m + 1)
                } else {
                    r(-6, m * m * (m + 1))
                };
                vec![
                    (r(1, 1), vec![1, 1, 1, 1]),
                    (r(-6, m), vec![2, 1, 1]),
                    (r(8, m * m), vec![3, 1]),
                    (r(3 * (m - 1), m * m * (m + 1)), vec![2, 2]),
                    (k4, vec![4]),
                ]
            }
        }
    }

    fn residual<T: Scalar>(self, p: &PowerSums<T>, as_printed: bool) -> Result<T> {
        let single = |r: usize| k_statistic_from_power_sums(&IntegerPartition::single(r), p);
        let mut rhs = T::zero();
        for (coef, factors) in self.rhs(p.n() as i64, as_printed) {
            let mut term = T::from_rational(&coef);
            for r in factors {
                term = term * single(r)?;
            }
            rhs = rhs + term;
        }
        Ok(k_statistic_from_power_sums(&self.lhs(), p)? - rhs)
    }
}

/// Left minus right side of the selected Tukey identity with `m = n`; exactly
/// zero on rational data.
pub fn tukey_identity_residual<T: Scalar>(identity_id: &str, x: &Sample<T>) -> Result<T> {
    let identity = TukeyIdentity::from_id(identity_id)?;
    identity.residual(&power_sums(x, identity.lhs().weight())?, false)
}

/// Residual of the identity with the coefficients exactly as published. The
/// `2^2` and `1^4` rows carry misprinted `k_4` coefficients, so their
/// residual is a nonzero multiple of `k_4`.
pub fn tukey_identity_residual_as_printed<T: Scalar>(
    identity_id: &str,
    x: &Sample<T>,
) -> Result<T> {
    let identity = TukeyIdentity::from_id(identity_id)?;
    identity.residual(&power_sums(x, identity.lhs().weight())?, true)
}
