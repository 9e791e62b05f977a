#![allow(dead_code)]

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_kstat::classical_stats::Sample;
use spectral_kstat::combinat::{enumerate_set_partitions, rational, refines};
use spectral_kstat::{IntegerPartition, Rational, SetPartition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(p: i64, q: i64) -> Rational {
    rational(p, q)
}

pub fn int(v: i64) -> Rational {
    rational(v, 1)
}

pub fn part(s: &str) -> IntegerPartition {
    IntegerPartition::parse(s).unwrap()
}

/// p/q with |p| ≤ 20 and 1 ≤ q ≤ 6.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rational(rng.random_range(-20..=20), rng.random_range(1..=6))
}

pub fn random_spectrum(rng: &mut impl Rng, n: usize) -> Sample<Rational> {
    Sample::new((0..n).map(|_| random_rational(rng)).collect()).unwrap()
}

/// All permutations of `0..n` as image vectors.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn cycle_type(p: &[usize]) -> IntegerPartition {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        lens.push(len);
    }
    IntegerPartition::new(lens).unwrap()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        q[v] = i;
    }
    q
}

/// (a∘b)(x) = a(b(x))
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

/// `(f·g)(σ) = Σ_ρ f(ρ) g(ρ⁻¹σ)` summed over every element of `S_n`, for
/// class functions given as maps on cycle types. Returns the value on each
/// cycle type.
pub fn brute_convolution(
    n: usize,
    f: &HashMap<IntegerPartition, Rational>,
    g: &HashMap<IntegerPartition, Rational>,
) -> HashMap<IntegerPartition, Rational> {
    let perms = permutations(n);
    let mut out = HashMap::new();
    for sigma in &perms {
        let c = cycle_type(sigma);
        if out.contains_key(&c) {
            continue;
        }
        let mut total = int(0);
        for rho in &perms {
            let omega = compose(&inverse(rho), sigma);
            total += &f[&cycle_type(rho)] * &g[&cycle_type(&omega)];
        }
        out.insert(c, total);
    }
    out
}

/// Möbius function of Π_n from the defining recursion
/// `𝔪(π,π) = 1`, `𝔪(π,τ) = −Σ_{π ≤ σ < τ} 𝔪(π,σ)`.
pub fn lattice_moebius(n: usize) -> (Vec<SetPartition>, HashMap<(usize, usize), Rational>) {
    let mut all = enumerate_set_partitions(n).unwrap();
    // coarser partitions have fewer blocks; process from finest to coarsest
    all.sort_by_key(|p| std::cmp::Reverse(p.num_blocks()));
    let k = all.len();
    let leq: Vec<Vec<bool>> = (0..k)
        .map(|a| (0..k).map(|b| refines(&all[a], &all[b]).unwrap()).collect())
        .collect();
    let mut mu = HashMap::new();
    for a in 0..k {
        for b in 0..k {
            if !leq[a][b] {
                continue;
            }
            let v = if a == b {
                int(1)
            } else {
                let mut s = int(0);
                for c in 0..k {
                    if c != b && leq[a][c] && leq[c][b] {
                        s += &mu[&(a, c)];
                    }
                }
                -s
            };
            mu.insert((a, b), v);
        }
    }
    (all, mu)
}
