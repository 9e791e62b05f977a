//! Haar unitaries, spectral samples, a Hermitian eigensolver, and simple
//! random sampling without replacement.
//!
//! Every random draw is driven by an [`RngStream`]; Monte Carlo callers use
//! one stream per replicate so results do not depend on scheduling.

use nalgebra::{Complex, DMatrix};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::classical_stats::Sample;
use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

/// Name of the generator behind [`RngStream`], recorded in reports.
pub const RNG_NAME: &str = "ChaCha8Rng(seed_from_u64, set_stream)";

/// `(seed, stream)` identifies an independent random sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RngStream {
    pub seed: u64,
    pub stream: u64,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        Self { seed, stream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// A complex Hermitian matrix stored as its real diagonal and strict lower
/// triangle; the upper triangle is implied by conjugation.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    order: usize,
    diag: Vec<f64>,
    lower: Vec<C64>,
}

impl HermitianMatrix {
    /// Builds the matrix from `f(j, k)` for `j ≥ k`; the imaginary part of
    /// diagonal values is dropped.
    pub fn from_lower(order: usize, mut f: impl FnMut(usize, usize) -> C64) -> Result<Self> {
        if order == 0 {
            return Err(Error::argument("matrix order must be positive"));
        }
        let diag = (0..order).map(|j| f(j, j).re).collect();
        let mut lower = Vec::with_capacity(order * (order - 1) / 2);
        for j in 1..order {
            for k in 0..j {
                lower.push(f(j, k));
            }
        }
        Ok(Self { order, diag, lower })
    }

    /// Takes the lower triangle of `a`; the upper triangle is not read.
    pub fn from_dmatrix(a: &DMatrix<C64>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::argument("Hermitian matrix must be square"));
        }
        Self::from_lower(a.nrows(), |j, k| a[(j, k)])
    }

    pub fn from_real_diagonal(d: &[f64]) -> Result<Self> {
        Self::from_lower(d.len(), |j, k| {
            if j == k {
                C64::new(d[j], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, j: usize, k: usize) -> C64 {
        use std::cmp::Ordering;
        match j.cmp(&k) {
            Ordering::Equal => C64::new(self.diag[j], 0.0),
            Ordering::Greater => self.lower[j * (j - 1) / 2 + k],
            Ordering::Less => self.lower[k * (k - 1) / 2 + j].conj(),
        }
    }

    pub fn to_dmatrix(&self) -> DMatrix<C64> {
        DMatrix::from_fn(self.order, self.order, |j, k| self.get(j, k))
    }

    pub fn trace(&self) -> f64 {
        self.diag.iter().sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        let d: f64 = self.diag.iter().map(|v| v * v).sum();
        let l: f64 = self.lower.iter().map(|v| v.norm_sqr()).sum();
        (d + 2.0 * l).sqrt()
    }

    fn is_finite(&self) -> bool {
        self.diag.iter().all(|v| v.is_finite())
            && self
                .lower
                .iter()
                .all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<C64> {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    DMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re * scale, im * scale)
    })
}

/// Orthonormal columns from QR of a Gaussian matrix, each column multiplied
/// by the phase of the matching diagonal entry of `R`.
fn haar_columns<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> DMatrix<C64> {
    let qr = ginibre(n, k, rng).qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..k {
        let d = r[(j, j)];
        let norm = d.norm();
        let phase = if norm > 0.0 {
            d / norm
        } else {
            C64::new(1.0, 0.0)
        };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

pub fn haar_unitary_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<DMatrix<C64>> {
    if n == 0 {
        return Err(Error::argument("unitary order must be positive"));
    }
    Ok(haar_columns(n, n, rng))
}

/// An `n × n` unitary drawn from Haar measure.
pub fn haar_unitary(n: usize, stream: &RngStream) -> Result<DMatrix<C64>> {
    haar_unitary_with(n, &mut stream.rng())
}

fn check_sizes(n: usize, m: usize) -> Result<()> {
    if m == 0 || m > n {
        return Err(Error::argument(format!(
            "sample size m = {m} must satisfy 1 ≤ m ≤ n = {n}"
        )));
    }
    Ok(())
}

/// Leading `m × m` block of `H diag(x) H†`.
pub fn compression(h: &DMatrix<C64>, x: &[f64], m: usize) -> Result<HermitianMatrix> {
    HermitianMatrix::from_lower(m, |j, k| {
        (0..x.len()).fold(C64::new(0.0, 0.0), |acc, l| {
            acc + h[(j, l)] * h[(k, l)].conj() * x[l]
        })
    })
}

pub fn spectral_sample_with<R: Rng + ?Sized>(
    x: &Sample<f64>,
    m: usize,
    rng: &mut R,
) -> Result<Sample<f64>> {
    let n = x.len();
    check_sizes(n, m)?;
    let h = haar_unitary_with(n, rng)?;
    hermitian_eigenvalues(&compression(&h, x.values(), m)?)
}

/// Eigenvalues (ascending) of the leading `m × m` block of `H diag(x) H†`,
/// `H` Haar on `U(n)`.
pub fn spectral_sample(x: &Sample<f64>, m: usize, stream: &RngStream) -> Result<Sample<f64>> {
    spectral_sample_with(x, m, &mut stream.rng())
}

/// The same law as [`spectral_sample`], built as `W† diag(x) W` from a Haar
/// `n × m` frame `W` (orthonormal columns) instead of a full unitary.
pub fn spectral_sample_rectangular(
    x: &Sample<f64>,
    m: usize,
    stream: &RngStream,
) -> Result<Sample<f64>> {
    let n = x.len();
    check_sizes(n, m)?;
    let w = haar_columns(n, m, &mut stream.rng());
    let a = HermitianMatrix::from_lower(m, |j, k| {
        (0..n).fold(C64::new(0.0, 0.0), |acc, l| {
            acc + w[(l, j)].conj() * w[(l, k)] * x.values()[l]
        })
    })?;
    hermitian_eigenvalues(&a)
}

pub fn srs_sample_with<R: Rng + ?Sized, T: crate::Scalar>(
    x: &Sample<T>,
    m: usize,
    rng: &mut R,
) -> Result<Sample<T>> {
    check_sizes(x.len(), m)?;
    let picked = index::sample(rng, x.len(), m);
    Sample::new(picked.iter().map(|j| x.values()[j].clone()).collect())
}

/// A uniform size-`m` subset of the entries of `x`, without replacement.
pub fn srs_sample<T: crate::Scalar>(
    x: &Sample<T>,
    m: usize,
    stream: &RngStream,
) -> Result<Sample<T>> {
    srs_sample_with(x, m, &mut stream.rng())
}

const MAX_SWEEPS: usize = 64;

/// Eigenvalues in ascending order and the matching orthonormal eigenvectors
/// (columns), by cyclic complex Jacobi rotations.
pub fn hermitian_eigen(a: &HermitianMatrix) -> Result<(Vec<f64>, DMatrix<C64>)> {
    if !a.is_finite() {
        return Err(Error::argument("matrix has non-finite entries"));
    }
    let n = a.order();
    let mut m = a.to_dmatrix();
    let mut v = DMatrix::<C64>::identity(n, n);
    let threshold = 1e-17 * a.frobenius_norm();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let g = apq.norm();
                if g <= threshold || g == 0.0 {
                    continue;
                }
                rotated = true;
                let e = apq / g;
                let theta = (m[(q, q)].re - m[(p, p)].re) / (2.0 * g);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // J = [[c, s e], [−s ē, c]] on coordinates (p, q).
                let jpq = e * s;
                let jqp = -e.conj() * s;
                for k in 0..n {
                    let (kp, kq) = (m[(k, p)], m[(k, q)]);
                    m[(k, p)] = kp * c + kq * jqp;
                    m[(k, q)] = kp * jpq + kq * c;
                    let (vp, vq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = vp * c + vq * jqp;
                    v[(k, q)] = vp * jpq + vq * c;
                }
                for k in 0..n {
                    let (pk, qk) = (m[(p, k)], m[(q, k)]);
                    m[(p, k)] = pk * c + qk * jqp.conj();
                    m[(q, k)] = pk * jpq.conj() + qk * c;
                }
                m[(p, q)] = C64::new(0.0, 0.0);
                m[(q, p)] = C64::new(0.0, 0.0);
                m[(p, p)].im = 0.0;
                m[(q, q)].im = 0.0;
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok((values, vectors))
}

/// Eigenvalues of `a` in ascending order.
pub fn hermitian_eigenvalues(a: &HermitianMatrix) -> Result<Sample<f64>> {
    Sample::new(hermitian_eigen(a)?.0)
}
