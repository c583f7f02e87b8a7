//! Exact arithmetic over integer partitions.
//!
//! The crate computes generalized binomial coefficients `<λ, r>` (the number of
//! ways to pick `r` cells of a Ferrers diagram hitting every row), the
//! centralizer orders `z_μ`, Stirling numbers of the first kind and the
//! factorial polynomials, and checks a family of partition-sum identities
//! built from them. Every check returns both sides in a canonical text form so
//! that a failure carries its own witness.
//!
//! - [`partitions`]: enumeration and statistics of partitions
//! - [`combinat`]: factorials, binomials, Stirling numbers
//! - [`polyalg`]: univariate and sparse multivariate polynomials, truncated series
//! - [`identities`]: `<λ, r>` and the identity verifiers
//! - [`sweep`]: parameter sweeps, reports and the command-line front end
//!
//! ```
//! use partid::identities::{gen_binom, thm1_sides};
//! use partid::polyalg::Canonical;
//! use partid::{Integer, Partition};
//!
//! let lambda = Partition::new(vec![2, 1]).unwrap();
//! assert_eq!(gen_binom(&lambda, 2), Integer::from(2));
//!
//! let sides = thm1_sides(2, 2, 2)?;
//! assert_eq!(sides.lhs.canonical(), "2*X - 3");
//! assert!(sides.holds());
//! # Ok::<(), partid::Error>(())
//! ```

pub mod combinat;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod polyalg;
pub mod sweep;

pub use error::{Error, Result};
pub use partitions::Partition;

/// Arbitrary-precision integer used for every integer-valued coefficient.
pub type Integer = num_bigint::BigInt;
/// Normalized exact rational.
pub type Rational = num_rational::BigRational;
