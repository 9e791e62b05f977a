//! Exact solution of small rational linear systems.
//!
//! Rows are scaled to integers and reduced with Bareiss fraction-free
//! elimination, so every intermediate entry stays an integer; only the final
//! back substitution divides.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinat::Rational;

/// Solves `a · x = b`. Returns `None` when `a` is singular or not square.
pub fn solve_exact(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return None;
    }
    // Augmented integer matrix [A | b], each row multiplied by the lcm of its denominators.
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let lcm = row
                .iter()
                .chain(std::iter::once(rhs))
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .chain(std::iter::once(rhs))
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::rational;

    #[test]
    fn solves_rational_system() {
        // x + y/2 = 1, x/3 - y = 2  →  x = 12/7, y = -10/7
        let a = vec![
            vec![rational(1, 1), rational(1, 2)],
            vec![rational(1, 3), rational(-1, 1)],
        ];
        let b = vec![rational(1, 1), rational(2, 1)];
        assert_eq!(
            solve_exact(&a, &b).unwrap(),
            vec![rational(12, 7), rational(-10, 7)]
        );
    }

    #[test]
    fn needs_row_exchange() {
        let a = vec![
            vec![rational(0, 1), rational(1, 1), rational(2, 1)],
            vec![rational(1, 1), rational(0, 1), rational(3, 1)],
            vec![rational(4, 1), rational(-3, 1), rational(8, 1)],
        ];
        let b = vec![rational(1, 1), rational(2, 1), rational(3, 1)];
        let x = solve_exact(&a, &b).unwrap();
        for (row, rhs) in a.iter().zip(&b) {
            let lhs: Rational = row.iter().zip(&x).map(|(a, x)| a * x).sum();
            assert_eq!(&lhs, rhs);
        }
    }

    #[test]
    fn singular_and_malformed_systems() {
        let a = vec![
            vec![rational(1, 1), rational(2, 1)],
            vec![rational(2, 1), rational(4, 1)],
        ];
        assert!(solve_exact(&a, &[rational(1, 1), rational(1, 1)]).is_none());
        assert!(solve_exact(&a, &[rational(1, 1)]).is_none());
    }
}
