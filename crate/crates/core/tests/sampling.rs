//! Distributional checks on the samplers and exhaustive checks of classical
//! inheritance.

mod common;

use common::{part, random_spectrum, rng};
use num_traits::Zero;
use rayon::prelude::*;
use spectral_kstat::classical_stats::{k_statistic, Sample};
use spectral_kstat::combinat::enumerate_partitions;
use spectral_kstat::experiments::mean_and_stderr;
use spectral_kstat::random_matrix::{
    compression, haar_unitary, spectral_sample, spectral_sample_rectangular, srs_sample, RngStream,
};
use spectral_kstat::Rational;
use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Two-sample Kolmogorov–Smirnov statistic and its asymptotic p-value.
fn ks_two_sample(mut a: Vec<f64>, mut b: Vec<f64>) -> (f64, f64) {
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < a.len() && j < b.len() {
        let t = a[i].min(b[j]);
        while i < a.len() && a[i] <= t {
            i += 1;
        }
        while j < b.len() && b[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    let ne = (na * nb / (na + nb)).sqrt();
    let lambda = (ne + 0.12 + 0.11 / ne) * d;
    if lambda < 0.3 {
        // the series converges badly here and the p-value is ≈ 1
        return (d, 1.0);
    }
    let p = (1..=100)
        .map(|k| {
            let k = k as f64;
            2.0 * (-1f64).powf(k - 1.0) * (-2.0 * k * k * lambda * lambda).exp()
        })
        .sum::<f64>()
        .clamp(0.0, 1.0);
    (d, p)
}

#[test]
fn haar_entries_have_the_right_second_moment() {
    let n = 4;
    let draws: Vec<f64> = (0..100_000u64)
        .into_par_iter()
        .map(|s| haar_unitary(n, &RngStream::new(5, s)).unwrap()[(0, 0)].norm_sqr())
        .collect();
    let (mean, se) = mean_and_stderr(&draws);
    let target = 1.0 / n as f64;
    assert!(
        (mean - target).abs() <= 5.0 * se,
        "E|Q11|² = {mean} ± {se}, want {target}"
    );
}

#[test]
fn srs_of_size_one_is_uniform() {
    let x = Sample::new((0..6).map(|v| v as f64).collect()).unwrap();
    let draws = 6_000;
    let mut counts = [0usize; 6];
    for s in 0..draws {
        let y = srs_sample(&x, 1, &RngStream::new(17, s)).unwrap();
        counts[y.values()[0] as usize] += 1;
    }
    let expected = draws as f64 / 6.0;
    let chi2: f64 = counts
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    let p = 1.0 - ChiSquared::new(5.0).unwrap().cdf(chi2);
    assert!(p > 0.001, "chi² = {chi2}, p = {p}, counts {counts:?}");
}

#[test]
fn trace_law_is_invariant_under_preconjugation() {
    let x = [0.0, 1.0, 2.0, 5.0, 9.0];
    let (n, m, draws) = (x.len(), 3, 10_000u64);
    let g = haar_unitary(n, &RngStream::new(1234, 0)).unwrap();
    let plain: Vec<f64> = (0..draws)
        .into_par_iter()
        .map(|s| {
            let h = haar_unitary(n, &RngStream::new(21, s)).unwrap();
            compression(&h, &x, m).unwrap().trace()
        })
        .collect();
    // Tr of the leading block of (HG) X (HG)†
    let conjugated: Vec<f64> = (0..draws)
        .into_par_iter()
        .map(|s| {
            let hg = haar_unitary(n, &RngStream::new(22, s)).unwrap() * &g;
            (0..m)
                .map(|j| (0..n).map(|k| hg[(j, k)].norm_sqr() * x[k]).sum::<f64>())
                .sum()
        })
        .collect();
    let (d, p) = ks_two_sample(plain, conjugated);
    assert!(p > 0.001, "KS D = {d}, p = {p}");
}

#[test]
fn rectangular_and_square_constructions_agree_in_law() {
    let x = Sample::new(vec![-1.0, 0.5, 2.0, 3.0, 7.0, 8.0]).unwrap();
    let (m, draws) = (3, 10_000u64);
    let run = |rect: bool, seed: u64| -> (Vec<f64>, Vec<f64>) {
        (0..draws)
            .into_par_iter()
            .map(|s| {
                let stream = RngStream::new(seed, s);
                let y = if rect {
                    spectral_sample_rectangular(&x, m, &stream)
                } else {
                    spectral_sample(&x, m, &stream)
                }
                .unwrap();
                (y.values().iter().sum::<f64>(), y.values()[0])
            })
            .unzip()
    };
    let (tr_sq, min_sq) = run(false, 31);
    let (tr_rect, min_rect) = run(true, 32);
    let (d, p) = ks_two_sample(tr_sq, tr_rect);
    assert!(p > 0.001, "trace: KS D = {d}, p = {p}");
    let (d, p) = ks_two_sample(min_sq, min_rect);
    assert!(p > 0.001, "smallest eigenvalue: KS D = {d}, p = {p}");
}

#[test]
fn spectral_samples_interlace() {
    let x = Sample::new(vec![-3.0, -1.0, 0.0, 2.0, 4.0, 4.5, 10.0]).unwrap();
    for s in 0..200 {
        let y = spectral_sample(&x, 1 + (s as usize % 6), &RngStream::new(8, s)).unwrap();
        for v in y.values() {
            assert!((-3.0 - 1e-9..=10.0 + 1e-9).contains(v), "{v}");
        }
    }
}

#[test]
fn sampling_is_independent_of_thread_count() {
    let x = Sample::new(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
    let seq: Vec<Vec<f64>> = (0..64)
        .map(|s| {
            spectral_sample(&x, 3, &RngStream::new(3, s))
                .unwrap()
                .values()
                .to_vec()
        })
        .collect();
    let par: Vec<Vec<f64>> = (0..64usize)
        .into_par_iter()
        .with_max_len(1)
        .map(|s| {
            spectral_sample(&x, 3, &RngStream::new(3, s as u64))
                .unwrap()
                .values()
                .to_vec()
        })
        .collect();
    assert_eq!(seq, par);
}

fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == m)
        .map(|mask| (0..n).filter(|j| mask & (1 << j) != 0).collect())
        .collect()
}

/// Averages of `k_λ` over every size-`m` subset reproduce `k_λ(x)` exactly.
fn check_exhaustive_inheritance(n: usize, m: usize, max_degree: usize, seed: u64) {
    let x = random_spectrum(&mut rng(seed), n);
    let all = subsets(n, m);
    for i in 1..=max_degree {
        for lambda in enumerate_partitions(i).unwrap() {
            let total = all.iter().fold(Rational::zero(), |acc, idx| {
                let y = Sample::new(idx.iter().map(|&j| x.values()[j].clone()).collect()).unwrap();
                acc + k_statistic::<Rational>(&lambda, &y).unwrap()
            });
            let average = total / common::int(all.len() as i64);
            assert_eq!(
                average,
                k_statistic::<Rational>(&lambda, &x).unwrap(),
                "{lambda}"
            );
        }
    }
}

#[test]
fn classical_inheritance_by_enumeration() {
    check_exhaustive_inheritance(7, 4, 4, 70);
    check_exhaustive_inheritance(6, 3, 3, 60);
    assert_eq!(subsets(7, 4).len(), 35);
}

#[test]
fn srs_average_of_k2_matches_brute_force_mean() {
    // MC cross-check of the sampler against the exact inherited value.
    let x = Sample::new(vec![0.0, 0.0, 0.0, 1.0, 5.0, 9.0]).unwrap();
    let target: f64 = k_statistic(&part("2"), &x).unwrap();
    let draws: Vec<f64> = (0..20_000u64)
        .map(|s| {
            let y = srs_sample(&x, 3, &RngStream::new(40, s)).unwrap();
            k_statistic(&part("2"), &y).unwrap()
        })
        .collect();
    let (mean, se) = mean_and_stderr(&draws);
    assert!(
        (mean - target).abs() <= 4.0 * se,
        "{mean} ± {se} vs {target}"
    );
}

#[test]
fn ks_helper_rejects_a_shifted_law() {
    let a: Vec<f64> = (0..2000).map(|k| (k as f64 + 0.5) / 2000.0).collect();
    let b: Vec<f64> = a.iter().map(|v| v + 0.2).collect();
    let (_, p) = ks_two_sample(a.clone(), b);
    assert!(p < 1e-6, "{p}");
    let (d, p) = ks_two_sample(a.clone(), a);
    assert_eq!(d, 0.0);
    assert!(p > 0.99);
}
