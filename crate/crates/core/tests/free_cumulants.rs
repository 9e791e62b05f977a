//! Free cumulants against the Möbius function of the noncrossing lattice,
//! computed by recursion on NC(i) itself.

mod common;

use std::collections::HashMap;

use common::{random_rational, rng};
use num_traits::{One, Zero};
use spectral_kstat::combinat::{enumerate_noncrossing, refines, SetPartition};
use spectral_kstat::free_probability::{moments_to_free_cumulants, MomentSequence};
use spectral_kstat::Rational;

/// `𝔪_NC(π, 1_i)` for every `π ∈ NC(i)`.
fn nc_moebius_to_top(i: usize) -> Vec<(SetPartition, Rational)> {
    let mut nc = enumerate_noncrossing(i).unwrap();
    nc.sort_by_key(|p| std::cmp::Reverse(p.num_blocks()));
    let top = SetPartition::top(i);
    // μ(π, 1) = −Σ_{π < σ ≤ 1} μ(σ, 1), processed from the top down
    let mut to_top: HashMap<SetPartition, Rational> = HashMap::new();
    for p in nc.iter().rev() {
        let v = if *p == top {
            Rational::one()
        } else {
            -nc.iter()
                .filter(|s| *s != p && refines(p, s).unwrap())
                .fold(Rational::zero(), |acc, s| acc + &to_top[s])
        };
        to_top.insert(p.clone(), v);
    }
    nc.into_iter()
        .map(|p| {
            let v = to_top[&p].clone();
            (p, v)
        })
        .collect()
}

#[test]
fn cumulants_match_noncrossing_moebius_inversion() {
    let mut g = rng(55);
    for d in 1..=5 {
        for _ in 0..4 {
            let m: Vec<Rational> = (0..d).map(|_| random_rational(&mut g)).collect();
            let c = moments_to_free_cumulants(&MomentSequence::new(m.clone()).unwrap());
            for i in 1..=d {
                let oracle =
                    nc_moebius_to_top(i)
                        .into_iter()
                        .fold(Rational::zero(), |acc, (p, mu)| {
                            let phi = p
                                .blocks()
                                .iter()
                                .fold(Rational::one(), |a, b| a * &m[b.len() - 1]);
                            acc + mu * phi
                        });
                assert_eq!(c.get(i), &oracle, "c_{i}");
            }
        }
    }
}

#[test]
fn noncrossing_moebius_values_are_signed_catalan_numbers() {
    // 𝔪_NC(0_i, 1_i) = (−1)^{i−1} Cat_{i−1}
    for (i, expected) in [(1, 1), (2, -1), (3, 2), (4, -5), (5, 14)] {
        let bottom = SetPartition::bottom(i);
        let v = nc_moebius_to_top(i)
            .into_iter()
            .find(|(p, _)| *p == bottom)
            .unwrap()
            .1;
        assert_eq!(v, common::int(expected));
    }
}
