//! Exact polynomial and truncated power series algebra over the rationals.
//!
//! [`UniPoly`] is a polynomial in the single indeterminate `X`. [`MultiPoly`]
//! is sparse over an explicitly declared, ordered variable list; binary
//! operations align the two lists (left operand's order first). A
//! [`TruncatedSeries`] is a [`MultiPoly`] together with per-variable exponent
//! caps that every ring operation re-applies.
//!
//! Every type renders to a canonical string (see [`Canonical`]); two values
//! over the same variable list are equal iff their renderings are identical.

mod multi;
mod series;
mod special;
mod uni;

pub use multi::MultiPoly;
pub use series::{series_exp, TruncatedSeries};
pub use special::{
    binom_multi, binom_poly, binom_poly_shifted, falling_poly, h_one_power, rising_poly, theorem9_lhs,
    theorem9_rhs,
};
pub use uni::UniPoly;

use std::fmt::Write;

use num_traits::{One, Signed};

use crate::{Integer, Rational};

/// Deterministic text rendering used for reports and equality witnesses.
pub trait Canonical {
    fn canonical(&self) -> String;
}

impl Canonical for Integer {
    fn canonical(&self) -> String {
        self.to_string()
    }
}

impl Canonical for Rational {
    fn canonical(&self) -> String {
        self.to_string()
    }
}

pub(crate) fn rat(v: impl Into<Integer>) -> Rational {
    Rational::from_integer(v.into())
}

/// Appends `coeff * monomial` to a sum being rendered. An empty `monomial`
/// stands for the constant 1.
pub(crate) fn push_term(out: &mut String, coeff: &Rational, monomial: &str) {
    let negative = coeff.is_negative();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let magnitude = coeff.abs();
    if monomial.is_empty() {
        let _ = write!(out, "{magnitude}");
    } else if magnitude.is_one() {
        out.push_str(monomial);
    } else {
        let _ = write!(out, "{magnitude}*{monomial}");
    }
}

pub(crate) fn finish_sum(out: String) -> String {
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
