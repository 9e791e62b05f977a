//! Natural statistics for spectral samples.
//!
//! A spectral sample of size `m` from a spectrum `x = (x_1, ..., x_n)` is the
//! eigenvalue set of the leading `m x m` block of `H diag(x) H†`, with `H`
//! Haar-distributed on the unitary group. This crate computes the symmetric
//! functions of `x` whose expectation is preserved by that operation
//! (spectral k-statistics and polykays), in exact rational arithmetic, and
//! provides a seeded Monte Carlo harness that checks the preservation
//! property numerically.
//!
//! Layout:
//!
//! - [`combinat`]: integer/set/noncrossing partitions, `d_λ`, `s_λ`, Möbius values.
//! - [`group_algebra`]: class functions on `S_i`, convolution and inversion.
//! - [`classical_stats`]: power sums, augmented symmetric functions, Fisher/Tukey k's.
//! - [`spectral_stats`]: spectral k-statistics, generalized polykays `l_λ`, closed forms.
//! - [`free_probability`]: moments and free cumulants over noncrossing partitions.
//! - [`random_matrix`]: Haar unitaries, spectral samples, Hermitian eigenvalues.
//! - [`experiments`]: Monte Carlo verification suites and report I/O.

pub mod classical_stats;
pub mod combinat;
mod error;
pub mod experiments;
pub mod free_probability;
pub mod group_algebra;
pub mod random_matrix;
pub mod scalar;
pub mod spectral_stats;

pub use combinat::{IntegerPartition, Rational, SetPartition};
pub use error::{Error, Result};
pub use scalar::Scalar;
