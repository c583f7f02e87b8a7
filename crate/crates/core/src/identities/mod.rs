//! Generalized binomial coefficients `<λ, r>` and the identity verifiers.
//!
//! Each verifier computes both sides of one identity instance independently
//! and returns them as [`Sides`]; deciding equality is left to the caller so
//! that a mismatch keeps both values as a witness.

mod conjectures;
mod genbinom;
mod scalar;
mod univariate;
mod zseries;

pub use conjectures::{conj1_sides, conj2_sides, conj_p, conj_variables};
pub use genbinom::{
    gen_binom, gen_binom_oracle, gen_binom_row, length_relation_sides, recurrence_sides,
    sum_rising, sum_rising_by_multiplicity, DEFAULT_ORACLE_CAP,
};
pub use scalar::{eq3_sides, h_relation_sides, lemma_sides, thm2_sides, thm3_sides};
pub use univariate::{
    chu_vandermonde_sides, classical_alt_sides, classical_sides, eq2_sides, h_convolution_sides,
    thm1_alt_sides, thm1_sides, thm4_alt_sides, thm4_sides,
};
pub use zseries::{thm5_sides, thm7_at_ones, thm7_sides, thm8_sides, XZ};

use crate::partitions::{enumerate, Partition};
use crate::polyalg::Canonical;
use crate::Rational;

/// Both sides of one identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T> Sides<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        Self { lhs, rhs }
    }

    pub fn map<U>(self, f: impl Fn(T) -> U) -> Sides<U> {
        Sides {
            lhs: f(self.lhs),
            rhs: f(self.rhs),
        }
    }
}

impl<T: PartialEq> Sides<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl<T: Canonical> Sides<T> {
    pub fn canonical(&self) -> Sides<String> {
        Sides {
            lhs: self.lhs.canonical(),
            rhs: self.rhs.canonical(),
        }
    }
}

fn sign(exp: i64) -> Rational {
    if exp.rem_euclid(2) == 0 {
        Rational::from_integer(1.into())
    } else {
        Rational::from_integer((-1).into())
    }
}

/// `(μ, <μ,r>/z_μ)` over partitions of `n` with `<μ,r> ≠ 0`, optionally
/// restricted to length `len`.
fn weighted_partitions(n: usize, r: usize, len: Option<usize>) -> Vec<(Partition, Rational)> {
    enumerate(n)
        .into_iter()
        .filter(|mu| len.is_none_or(|l| mu.len() == l))
        .filter(|mu| mu.len() <= r && r <= n)
        .map(|mu| {
            let w = Rational::new(gen_binom(&mu, r), mu.zeta());
            (mu, w)
        })
        .filter(|(_, w)| *w != Rational::from_integer(0.into()))
        .collect()
}
