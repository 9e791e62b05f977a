//! The center of the group algebra of `S_i`: class functions with
//! convolution `(f·g)(σ) = Σ_{ρω=σ} f(ρ) g(ω)`.
//!
//! Convolution runs through a per-degree table of structure constants,
//! counted once by brute force over `S_i`. Inversion solves the
//! class-basis linear system exactly. There is no floating-point path here.

mod exact_linalg;

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::combinat::{enumerate_partitions, IntegerPartition, Rational, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};

pub use exact_linalg::solve_exact;

/// A rational-valued function on `S_i` that is constant on cycle classes.
///
/// Values are stored in the order of [`enumerate_partitions`], so the last
/// entry is the identity class `(1^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    degree: usize,
    values: Vec<Rational>,
}

impl ClassFunction {
    pub fn from_values(degree: usize, values: Vec<Rational>) -> Result<Self> {
        let classes = classes(degree)?;
        if values.len() != classes.len() {
            return Err(Error::argument(format!(
                "degree {degree} has {} classes, got {} values",
                classes.len(),
                values.len()
            )));
        }
        Ok(Self { degree, values })
    }

    pub fn from_fn(
        degree: usize,
        mut f: impl FnMut(&IntegerPartition) -> Rational,
    ) -> Result<Self> {
        let values = classes(degree)?.iter().map(&mut f).collect();
        Ok(Self { degree, values })
    }

    pub fn zero(degree: usize) -> Result<Self> {
        Self::from_fn(degree, |_| Rational::zero())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// The classes, aligned with [`Self::values`].
    pub fn classes(&self) -> &'static [IntegerPartition] {
        classes(self.degree).expect("degree validated at construction")
    }

    pub fn get(&self, lambda: &IntegerPartition) -> Option<&Rational> {
        let idx = self.classes().iter().position(|c| c == lambda)?;
        Some(&self.values[idx])
    }

    pub fn scale(&self, a: &Rational) -> Self {
        Self {
            degree: self.degree,
            values: self.values.iter().map(|v| v * a).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_degree(self, other)?;
        Ok(Self {
            degree: self.degree,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .classes()
            .iter()
            .zip(&self.values)
            .map(|(c, v)| format!("{c}: {v}"))
            .collect();
        write!(f, "[{}]", items.join(", "))
    }
}

fn same_degree(f: &ClassFunction, g: &ClassFunction) -> Result<()> {
    if f.degree != g.degree {
        return Err(Error::argument(format!(
            "class functions of different degrees ({} vs {})",
            f.degree, g.degree
        )));
    }
    Ok(())
}

static CLASSES: [OnceLock<Vec<IntegerPartition>>; DEFAULT_DEGREE_CAP + 1] =
    [const { OnceLock::new() }; DEFAULT_DEGREE_CAP + 1];

/// Cycle classes of `S_i`, in [`enumerate_partitions`] order.
pub fn classes(degree: usize) -> Result<&'static [IntegerPartition]> {
    crate::combinat::check_degree("class algebra degree", degree, DEFAULT_DEGREE_CAP)?;
    Ok(CLASSES[degree].get_or_init(|| enumerate_partitions(degree).expect("degree checked")))
}

pub fn class_index(lambda: &IntegerPartition) -> Result<usize> {
    classes(lambda.weight())?
        .iter()
        .position(|c| c == lambda)
        .ok_or_else(|| Error::argument(format!("{lambda} is not a class")))
}

/// Structure constants of the class algebra: `N[ρ][ω][σ]` counts pairs
/// `(ρ, ω)` of the given classes whose product is a fixed representative of
/// class `σ`.
#[derive(Clone, Debug)]
pub struct ClassConvolutionTable {
    degree: usize,
    nclasses: usize,
    counts: Vec<u64>,
}

impl ClassConvolutionTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn classes(&self) -> &'static [IntegerPartition] {
        classes(self.degree).expect("degree validated at construction")
    }

    /// `N[rho][omega][sigma]`, with arguments as class indices.
    pub fn count(&self, rho: usize, omega: usize, sigma: usize) -> u64 {
        self.counts[(rho * self.nclasses + omega) * self.nclasses + sigma]
    }
}

/// Counts the structure constants by running over all of `S_i` against one
/// representative per target class. Cost `O(i! · p(i) · i)`.
pub fn build_convolution_table(degree: usize) -> Result<ClassConvolutionTable> {
    let classes = classes(degree)?;
    let k = classes.len();
    let mut counts = vec![0u64; k * k * k];
    let perms = permutations(degree);
    let class_of: Vec<usize> = perms
        .iter()
        .map(|p| {
            let c = cycle_class(p);
            classes
                .iter()
                .position(|x| *x == c)
                .expect("cycle class is a partition")
        })
        .collect();
    for (sigma, lambda) in classes.iter().enumerate() {
        let target = class_representative(lambda);
        for (rho, &rho_class) in perms.iter().zip(&class_of) {
            // ρω = σ0  ⇔  ω = ρ⁻¹σ0
            let omega = compose(&invert_perm(rho), &target);
            let omega_class = classes
                .iter()
                .position(|x| *x == cycle_class(&omega))
                .expect("cycle class is a partition");
            counts[(rho_class * k + omega_class) * k + sigma] += 1;
        }
    }
    Ok(ClassConvolutionTable {
        degree,
        nclasses: k,
        counts,
    })
}

static TABLES: [OnceLock<ClassConvolutionTable>; DEFAULT_DEGREE_CAP + 1] =
    [const { OnceLock::new() }; DEFAULT_DEGREE_CAP + 1];

/// Cached [`build_convolution_table`]; each degree is built at most once.
pub fn convolution_table(degree: usize) -> Result<&'static ClassConvolutionTable> {
    classes(degree)?;
    Ok(TABLES[degree].get_or_init(|| build_convolution_table(degree).expect("degree checked")))
}

pub fn convolve(f: &ClassFunction, g: &ClassFunction) -> Result<ClassFunction> {
    same_degree(f, g)?;
    let table = convolution_table(f.degree)?;
    let k = f.values.len();
    let mut out = vec![Rational::zero(); k];
    for (rho, fv) in f.values.iter().enumerate() {
        if fv.is_zero() {
            continue;
        }
        for (omega, gv) in g.values.iter().enumerate() {
            if gv.is_zero() {
                continue;
            }
            let prod = fv * gv;
            for (sigma, slot) in out.iter_mut().enumerate() {
                let n = table.count(rho, omega, sigma);
                if n != 0 {
                    *slot += &prod * Rational::from_integer(n.into());
                }
            }
        }
    }
    ClassFunction::from_values(f.degree, out)
}

/// The unit `δ`: one on the identity class, zero elsewhere.
pub fn delta(degree: usize) -> Result<ClassFunction> {
    let identity = IntegerPartition::ones(degree);
    ClassFunction::from_fn(degree, |c| {
        if *c == identity {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `μ(I_m)`: the class function `σ ↦ m^{|C(σ)|}`.
pub fn mu_identity(m: usize, degree: usize) -> Result<ClassFunction> {
    let m = Rational::from_integer(m.into());
    ClassFunction::from_fn(degree, |c| num_traits::pow(m.clone(), c.len()))
}

/// The convolution inverse, found by solving `f·g = δ` over the class basis.
pub fn invert(f: &ClassFunction) -> Result<ClassFunction> {
    let table = convolution_table(f.degree)?;
    let k = f.values.len();
    // (f·g)(σ) = Σ_ω A[σ][ω] g(ω),  A[σ][ω] = Σ_ρ N[ρ][ω][σ] f(ρ)
    let mut a = vec![vec![Rational::zero(); k]; k];
    for (sigma, row) in a.iter_mut().enumerate() {
        for (omega, entry) in row.iter_mut().enumerate() {
            for (rho, fv) in f.values.iter().enumerate() {
                let n = table.count(rho, omega, sigma);
                if n != 0 {
                    *entry += fv * Rational::from_integer(n.into());
                }
            }
        }
    }
    let rhs = delta(f.degree)?.values;
    let g = solve_exact(&a, &rhs).ok_or(Error::NotInvertible { degree: f.degree })?;
    let g = ClassFunction::from_values(f.degree, g)?;
    debug_assert_eq!(convolve(&g, f)?, delta(f.degree)?);
    Ok(g)
}

// Permutations of {0..n} in one-line notation.

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    // Lexicographic successor.
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

fn invert_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn cycle_class(p: &[usize]) -> IntegerPartition {
    let mut seen = vec![false; p.len()];
    let mut lengths = Vec::new();
    for start in 0..p.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    IntegerPartition::new(lengths).expect("nonempty permutation")
}

/// Cycles `(0 1 … λ_1−1)(λ_1 … )…` filled in increasing order.
fn class_representative(lambda: &IntegerPartition) -> Vec<usize> {
    let mut p = Vec::with_capacity(lambda.weight());
    let mut start = 0;
    for &len in lambda.parts() {
        for k in 0..len {
            p.push(start + (k + 1) % len);
        }
        start += len;
    }
    p
}
