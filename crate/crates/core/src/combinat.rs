//! Integer partitions, set partitions of `{1..i}`, noncrossing partitions and
//! the Möbius function of the set-partition lattice.
//!
//! Everything here is exact: counts are integers and coefficients are
//! [`Rational`]s.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational scalar (arbitrary precision, always reduced).
pub type Rational = BigRational;

/// Largest degree accepted by the enumerations unless a caller passes its own cap.
pub const DEFAULT_DEGREE_CAP: usize = 8;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

pub(crate) fn check_degree(what: &'static str, i: usize, cap: usize) -> Result<()> {
    if i == 0 {
        return Err(Error::argument(format!("{what} must be positive")));
    }
    if i > cap {
        return Err(Error::Capacity {
            what,
            requested: i,
            cap,
        });
    }
    Ok(())
}

/// A partition `λ ⊢ i`, stored with parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Builds a partition from parts in any order. Zero parts and the empty
    /// list are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::argument("a partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::argument("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// The one-part partition `(i)`.
    pub fn single(i: usize) -> Self {
        Self { parts: vec![i] }
    }

    /// The partition `(1^i)`.
    pub fn ones(i: usize) -> Self {
        Self { parts: vec![1; i] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the integer being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicities `r_j`, indexed so that `r[j]` counts parts equal to `j`
    /// (`r[0]` is always zero).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut r = vec![0; self.weight() + 1];
        for &p in &self.parts {
            r[p] += 1;
        }
        r
    }

    /// Parses `"2,1,1"`, `"1^2,2"` or `"(1^2,2)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in trimmed.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (tok, "1"),
            };
            let bad = || Error::argument(format!("cannot parse partition `{s}`"));
            let base: usize = base.parse().map_err(|_| bad())?;
            let exp: usize = exp.parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for IntegerPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<IntegerPartition> for Vec<usize> {
    fn from(p: IntegerPartition) -> Self {
        p.parts
    }
}

/// Exponential notation with ascending part sizes, e.g. `(1^2,2)`.
impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.multiplicities();
        let items: Vec<String> = r
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(j, &c)| {
                if c == 1 {
                    j.to_string()
                } else {
                    format!("{j}^{c}")
                }
            })
            .collect();
        write!(f, "({})", items.join(","))
    }
}

/// All partitions of `i` in reverse lexicographic order: `(i)` first, `(1^i)` last.
pub fn enumerate_partitions(i: usize) -> Result<Vec<IntegerPartition>> {
    enumerate_partitions_with_cap(i, DEFAULT_DEGREE_CAP)
}

pub fn enumerate_partitions_with_cap(i: usize, cap: usize) -> Result<Vec<IntegerPartition>> {
    check_degree("partition degree", i, cap)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(i);
    fill_partitions(i, i, &mut current, &mut out);
    Ok(out)
}

fn fill_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<IntegerPartition>,
) {
    if remaining == 0 {
        out.push(IntegerPartition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

/// `d_λ = i! / Π_j (j!)^{r_j} r_j!`, the number of set partitions of `{1..i}`
/// with block sizes `λ`.
pub fn coeff_d(lambda: &IntegerPartition) -> Rational {
    let r = lambda.multiplicities();
    let mut den = BigInt::one();
    for (j, &rj) in r.iter().enumerate().skip(1) {
        den *= num_traits::pow(factorial(j), rj) * factorial(rj);
    }
    Rational::new(factorial(lambda.weight()), den)
}

/// `s_λ = i! / Π_j j^{r_j} r_j!`, the number of permutations of cycle class `λ`.
pub fn coeff_s(lambda: &IntegerPartition) -> BigInt {
    let r = lambda.multiplicities();
    let mut den = BigInt::one();
    for (j, &rj) in r.iter().enumerate().skip(1) {
        den *= num_traits::pow(BigInt::from(j), rj) * factorial(rj);
    }
    factorial(lambda.weight()) / den
}

/// `(1!)^{r_2} (2!)^{r_3} ⋯`, the factor relating `s_λ` and `d_λ`, and the
/// prefactor turning a raw class value into a spectral polykay.
pub fn cycle_prefactor(lambda: &IntegerPartition) -> BigInt {
    lambda
        .parts()
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * factorial(p - 1))
}

/// A partition of `{1..size}` in canonical form: each block ascending, blocks
/// ordered by their minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    size: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates that `blocks` are nonempty, disjoint and cover `{1..size}`,
    /// then canonicalizes.
    pub fn new(size: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; size + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::argument("set partition blocks must be nonempty"));
            }
            for &e in block.iter() {
                if e == 0 || e > size {
                    return Err(Error::argument(format!("element {e} outside 1..={size}")));
                }
                if std::mem::replace(&mut seen[e], true) {
                    return Err(Error::argument(format!("element {e} appears twice")));
                }
            }
            block.sort_unstable();
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(Error::argument(
                "set partition blocks must cover the ground set",
            ));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { size, blocks })
    }

    /// Decodes a restricted growth string (`a[0] = 0`, `a[k] ≤ 1 + max a[..k]`).
    pub fn from_restricted_growth(rgs: &[usize]) -> Self {
        let nblocks = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (pos, &b) in rgs.iter().enumerate() {
            blocks[b].push(pos + 1);
        }
        Self {
            size: rgs.len(),
            blocks,
        }
    }

    /// The finest partition `{{1},{2},…}`.
    pub fn bottom(size: usize) -> Self {
        Self {
            size,
            blocks: (1..=size).map(|e| vec![e]).collect(),
        }
    }

    /// The one-block partition `{{1,…,size}}`.
    pub fn top(size: usize) -> Self {
        Self {
            size,
            blocks: vec![(1..=size).collect()],
        }
    }

    /// Canonical representative of the block-size class `λ`: consecutive
    /// runs of sizes `λ_1, λ_2, …`.
    pub fn of_class(lambda: &IntegerPartition) -> Self {
        let mut next = 1;
        let blocks = lambda
            .parts()
            .iter()
            .map(|&p| {
                let b: Vec<usize> = (next..next + p).collect();
                next += p;
                b
            })
            .collect();
        Self {
            size: lambda.weight(),
            blocks,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block sizes as an integer partition of `size`.
    pub fn class(&self) -> IntegerPartition {
        IntegerPartition::new(self.blocks.iter().map(Vec::len).collect())
            .expect("blocks are nonempty")
    }

    /// For each element `1..=size`, the index of its block (index 0 unused).
    fn labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.size + 1];
        for (k, block) in self.blocks.iter().enumerate() {
            for &e in block {
                label[e] = k;
            }
        }
        label
    }

    /// True if no two blocks interleave (`a < b < c < d` with `a, c` in one
    /// block and `b, d` in another).
    pub fn is_noncrossing(&self) -> bool {
        let label = self.labels();
        for x in 0..self.blocks.len() {
            for y in x + 1..self.blocks.len() {
                // Alternations between two blocks along 1..=size; four or more
                // runs means an interleaving.
                let mut runs = 0;
                let mut last = usize::MAX;
                for &l in &label[1..] {
                    if (l == x || l == y) && l != last {
                        runs += 1;
                        last = l;
                    }
                }
                if runs >= 4 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(usize::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

/// Every partition of `{1..i}` exactly once, in restricted-growth-string order.
pub fn enumerate_set_partitions(i: usize) -> Result<Vec<SetPartition>> {
    enumerate_set_partitions_with_cap(i, DEFAULT_DEGREE_CAP)
}

pub fn enumerate_set_partitions_with_cap(i: usize, cap: usize) -> Result<Vec<SetPartition>> {
    check_degree("set partition size", i, cap)?;
    let mut out = Vec::new();
    let mut rgs = vec![0; i];
    fill_rgs(1, 0, &mut rgs, &mut out);
    Ok(out)
}

fn fill_rgs(pos: usize, max: usize, rgs: &mut [usize], out: &mut Vec<SetPartition>) {
    if pos == rgs.len() {
        out.push(SetPartition::from_restricted_growth(rgs));
        return;
    }
    for b in 0..=max + 1 {
        rgs[pos] = b;
        fill_rgs(pos + 1, max.max(b), rgs, out);
    }
}

/// Noncrossing partitions of `{1..i}`, in the same order as [`enumerate_set_partitions`].
pub fn enumerate_noncrossing(i: usize) -> Result<Vec<SetPartition>> {
    enumerate_noncrossing_with_cap(i, DEFAULT_DEGREE_CAP)
}

pub fn enumerate_noncrossing_with_cap(i: usize, cap: usize) -> Result<Vec<SetPartition>> {
    Ok(enumerate_set_partitions_with_cap(i, cap)?
        .into_iter()
        .filter(SetPartition::is_noncrossing)
        .collect())
}

fn same_ground_set(pi: &SetPartition, tau: &SetPartition) -> Result<()> {
    if pi.size != tau.size {
        return Err(Error::argument(format!(
            "set partitions of different ground sets ({} vs {})",
            pi.size, tau.size
        )));
    }
    Ok(())
}

/// `π ≤ τ` in the refinement order: every block of `π` lies inside a block of `τ`.
pub fn refines(pi: &SetPartition, tau: &SetPartition) -> Result<bool> {
    same_ground_set(pi, tau)?;
    let label = tau.labels();
    Ok(pi
        .blocks
        .iter()
        .all(|b| b.iter().all(|&e| label[e] == label[b[0]])))
}

/// `λ(π, τ)` as multiplicities: `r[j]` blocks of `τ` contain exactly `j`
/// blocks of `π`. Requires `π ≤ τ`.
fn merge_profile(pi: &SetPartition, tau: &SetPartition) -> Vec<usize> {
    let label = tau.labels();
    let mut per_block = vec![0usize; tau.blocks.len()];
    for b in &pi.blocks {
        per_block[label[b[0]]] += 1;
    }
    let mut r = vec![0; pi.blocks.len() + 1];
    for c in per_block {
        r[c] += 1;
    }
    r
}

/// Möbius function of the set-partition lattice,
/// `𝔪(π, τ) = (−1)^{s−t} Π_j ((j−1)!)^{r_j}` with `s = |π|`, `t = |τ|`.
pub fn moebius(pi: &SetPartition, tau: &SetPartition) -> Result<Rational> {
    if !refines(pi, tau)? {
        return Err(Error::argument(format!("{pi} does not refine {tau}")));
    }
    let r = merge_profile(pi, tau);
    let mut value = BigInt::one();
    for (j, &rj) in r.iter().enumerate().skip(1) {
        value *= num_traits::pow(factorial(j - 1), rj);
    }
    if (pi.num_blocks() - tau.num_blocks()) % 2 == 1 {
        value = -value;
    }
    Ok(Rational::from_integer(value))
}

/// Coarsenings `τ ≥ π` together with `𝔪(π, τ)`.
pub fn coarsenings_with_moebius(pi: &SetPartition) -> Vec<(SetPartition, Rational)> {
    // Coarsenings of π correspond to set partitions of its blocks.
    let k = pi.num_blocks();
    let mut out = Vec::new();
    let mut rgs = vec![0; k];
    let mut over_blocks = Vec::new();
    fill_rgs(1.min(k), 0, &mut rgs, &mut over_blocks);
    for merge in over_blocks {
        let blocks: Vec<Vec<usize>> = merge
            .blocks
            .iter()
            .map(|group| {
                group
                    .iter()
                    .flat_map(|&b| pi.blocks[b - 1].iter().copied())
                    .collect()
            })
            .collect();
        let tau = SetPartition::new(pi.size, blocks).expect("merging blocks keeps a partition");
        let mu = moebius(pi, &tau).expect("τ is a coarsening of π");
        out.push((tau, mu));
    }
    out
}

pub fn bell_number(i: usize) -> BigInt {
    // Bell triangle.
    let mut row = vec![BigInt::one()];
    for _ in 1..=i {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap_or_else(BigInt::zero));
        for v in &row {
            let s = next.last().unwrap() + v;
            next.push(s);
        }
        row = next;
    }
    row[0].clone()
}

pub fn catalan_number(i: usize) -> BigInt {
    factorial(2 * i) / (factorial(i + 1) * factorial(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    fn sp(size: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(size, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p(&[1])]);
        assert_eq!(enumerate_partitions(4).unwrap().len(), 5);
        assert_eq!(enumerate_partitions(6).unwrap().len(), 11);
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);
    }

    #[test]
    fn partitions_in_reverse_lex_order() {
        let got: Vec<Vec<usize>> = enumerate_partitions(4)
            .unwrap()
            .into_iter()
            .map(Vec::from)
            .collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(matches!(
            enumerate_partitions(9),
            Err(Error::Capacity {
                requested: 9,
                cap: 8,
                ..
            })
        ));
        assert!(enumerate_partitions_with_cap(9, 9).is_ok());
        assert!(matches!(
            enumerate_set_partitions(0),
            Err(Error::Argument(_))
        ));
        assert!(enumerate_noncrossing(12).is_err());
    }

    #[test]
    fn partition_invariants() {
        for i in 1..=8 {
            for lam in enumerate_partitions(i).unwrap() {
                assert!(lam.parts().windows(2).all(|w| w[0] >= w[1]));
                let r = lam.multiplicities();
                let weighted: usize = r.iter().enumerate().map(|(j, c)| j * c).sum();
                assert_eq!(weighted, i);
                assert_eq!(r.iter().sum::<usize>(), lam.len());
            }
        }
    }

    #[test]
    fn d_and_s_examples() {
        assert_eq!(coeff_d(&p(&[1, 1])), rational(1, 1));
        assert_eq!(coeff_d(&p(&[2, 1])), rational(3, 1));
        assert_eq!(coeff_d(&p(&[3])), rational(1, 1));
        assert_eq!(coeff_s(&p(&[1, 1])), 1.into());
        assert_eq!(coeff_s(&p(&[2])), 1.into());
        assert_eq!(coeff_s(&p(&[3])), 2.into());
    }

    #[test]
    fn s_sums_to_factorial_and_d_relation_holds() {
        for i in 1..=8 {
            let parts = enumerate_partitions(i).unwrap();
            let total: BigInt = parts.iter().map(coeff_s).sum();
            assert_eq!(total, factorial(i));
            for lam in &parts {
                let lhs = coeff_d(lam) * Rational::from_integer(cycle_prefactor(lam));
                assert_eq!(lhs, Rational::from_integer(coeff_s(lam)), "λ = {lam}");
            }
            // Σ d_λ counts all set partitions.
            let d_total: Rational = parts.iter().map(coeff_d).sum();
            assert_eq!(d_total, Rational::from_integer(bell_number(i)));
        }
    }

    #[test]
    fn partition_parse_and_display() {
        let lam = IntegerPartition::parse("1^2,2").unwrap();
        assert_eq!(lam.parts(), &[2, 1, 1]);
        assert_eq!(lam.to_string(), "(1^2,2)");
        assert_eq!(IntegerPartition::parse("(3,1)").unwrap(), p(&[1, 3]));
        assert!(IntegerPartition::parse("2,x").is_err());
        assert!(IntegerPartition::parse("").is_err());
        assert!(IntegerPartition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn set_partition_counts() {
        assert_eq!(
            enumerate_set_partitions(1).unwrap(),
            vec![SetPartition::bottom(1)]
        );
        assert_eq!(enumerate_set_partitions(3).unwrap().len(), 5);
        assert_eq!(enumerate_set_partitions(4).unwrap().len(), 15);
        for i in 1..=8 {
            let all = enumerate_set_partitions(i).unwrap();
            assert_eq!(BigInt::from(all.len()), bell_number(i));
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn set_partition_validation_and_canonical_form() {
        let a = sp(3, &[&[3, 1], &[2]]);
        assert_eq!(a.blocks(), &[vec![1, 3], vec![2]]);
        assert_eq!(a, sp(3, &[&[2], &[1, 3]]));
        assert_eq!(a.to_string(), "{{1,3},{2}}");
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 2], vec![]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 4]]).is_err());
    }

    #[test]
    fn refinement_examples() {
        let a = sp(3, &[&[1, 2], &[3]]);
        assert!(refines(&a, &a).unwrap());
        assert!(refines(&SetPartition::bottom(3), &SetPartition::top(3)).unwrap());
        assert!(!refines(&a, &sp(3, &[&[1, 3], &[2]])).unwrap());
        assert!(refines(&a, &SetPartition::bottom(4)).is_err());
    }

    #[test]
    fn moebius_examples() {
        let a = sp(3, &[&[1, 2], &[3]]);
        assert_eq!(moebius(&a, &a).unwrap(), rational(1, 1));
        assert_eq!(
            moebius(&SetPartition::bottom(3), &SetPartition::top(3)).unwrap(),
            rational(2, 1)
        );
        assert_eq!(moebius(&a, &SetPartition::top(3)).unwrap(), rational(-1, 1));
        assert!(moebius(&SetPartition::top(3), &a).is_err());
        // Bottom to top of Π_4: (−1)^3 3! = −6.
        assert_eq!(
            moebius(&SetPartition::bottom(4), &SetPartition::top(4)).unwrap(),
            rational(-6, 1)
        );
    }

    #[test]
    fn coarsenings_are_exactly_the_upper_set() {
        for i in 1..=5 {
            let all = enumerate_set_partitions(i).unwrap();
            for pi in &all {
                let mut got: Vec<SetPartition> = coarsenings_with_moebius(pi)
                    .into_iter()
                    .map(|(t, _)| t)
                    .collect();
                got.sort();
                let mut want: Vec<SetPartition> = all
                    .iter()
                    .filter(|t| refines(pi, t).unwrap())
                    .cloned()
                    .collect();
                want.sort();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn noncrossing_examples() {
        assert_eq!(enumerate_noncrossing(2).unwrap().len(), 2);
        assert_eq!(enumerate_noncrossing(4).unwrap().len(), 14);
        assert_eq!(enumerate_noncrossing(5).unwrap().len(), 42);
        let crossing = sp(4, &[&[1, 3], &[2, 4]]);
        assert!(!crossing.is_noncrossing());
        let excluded: Vec<SetPartition> = enumerate_set_partitions(4)
            .unwrap()
            .into_iter()
            .filter(|p| !p.is_noncrossing())
            .collect();
        assert_eq!(excluded, vec![crossing]);
        // Nested blocks do not cross.
        assert!(sp(4, &[&[1, 4], &[2, 3]]).is_noncrossing());
    }

    #[test]
    fn class_representatives() {
        let lam = p(&[2, 1, 1]);
        let rep = SetPartition::of_class(&lam);
        assert_eq!(rep.class(), lam);
        assert_eq!(rep.blocks(), &[vec![1, 2], vec![3], vec![4]]);
        for i in 1..=6 {
            for lam in enumerate_partitions(i).unwrap() {
                let count = enumerate_set_partitions(i)
                    .unwrap()
                    .iter()
                    .filter(|s| s.class() == lam)
                    .count();
                assert_eq!(Rational::from_integer(count.into()), coeff_d(&lam));
            }
        }
    }

    #[test]
    fn bell_and_catalan_values() {
        let bell: Vec<BigInt> = (0..=8).map(bell_number).collect();
        let want: Vec<BigInt> = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(bell, want);
        assert_eq!(catalan_number(8), 1430.into());
    }
}
