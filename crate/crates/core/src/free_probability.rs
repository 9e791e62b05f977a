//! Moments and free cumulants of a single noncommutative variable, related by
//! `m_i = Σ_{π ∈ NC(i)} Π_{B ∈ π} c_{|B|}`.

use crate::combinat::{check_degree, enumerate_noncrossing, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `m_1, …, m_d` (`m_0 = 1` is implicit).
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence<T> {
    values: Vec<T>,
}

/// `c_1, …, c_d`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeCumulantSequence<T> {
    values: Vec<T>,
}

macro_rules! sequence_impl {
    ($name:ident, $what:literal) => {
        impl<T: Scalar> $name<T> {
            pub fn new(values: Vec<T>) -> Result<Self> {
                if values.is_empty() {
                    return Err(Error::argument(concat!(
                        "a ",
                        $what,
                        " sequence needs d ≥ 1"
                    )));
                }
                check_degree(
                    concat!($what, " sequence length"),
                    values.len(),
                    DEFAULT_DEGREE_CAP,
                )?;
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

            /// The entry of order `i ≥ 1`.
            pub fn get(&self, i: usize) -> &T {
                &self.values[i - 1]
            }
        }
    };
}

sequence_impl!(MomentSequence, "moment");
sequence_impl!(FreeCumulantSequence, "free cumulant");

/// `Σ_{π ∈ NC(i)} Π_B c_{|B|}` using the first `i` cumulants.
fn nc_moment<T: Scalar>(c: &[T], i: usize) -> Result<T> {
    let mut total = T::zero();
    for pi in enumerate_noncrossing(i)? {
        let term = pi
            .blocks()
            .iter()
            .fold(T::one(), |acc, b| acc * c[b.len() - 1].clone());
        total = total + term;
    }
    Ok(total)
}

pub fn free_cumulants_to_moments<T: Scalar>(c: &FreeCumulantSequence<T>) -> MomentSequence<T> {
    let values = (1..=c.len())
        .map(|i| nc_moment(c.values(), i).expect("length checked at construction"))
        .collect();
    MomentSequence { values }
}

/// Triangular recursion: `c_i = m_i − (sum over NC(i) with at least two blocks)`.
pub fn moments_to_free_cumulants<T: Scalar>(m: &MomentSequence<T>) -> FreeCumulantSequence<T> {
    let mut c: Vec<T> = Vec::with_capacity(m.len());
    for (idx, mi) in m.values().iter().enumerate() {
        c.push(T::zero());
        let rest = nc_moment(&c, idx + 1).expect("length checked at construction");
        c[idx] = mi.clone() - rest;
    }
    FreeCumulantSequence { values: c }
}

/// Moments `m_1..m_d` of the standard semicircle law: Catalan numbers at even orders.
pub fn semicircle_moments(d: usize) -> Result<MomentSequence<crate::Rational>> {
    let values = (1..=d)
        .map(|i| {
            if i % 2 == 1 {
                crate::Rational::from_integer(0.into())
            } else {
                crate::Rational::from_integer(crate::combinat::catalan_number(i / 2))
            }
        })
        .collect();
    MomentSequence::new(values)
}
