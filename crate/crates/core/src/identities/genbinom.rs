use num_traits::{One, Zero};

use super::Sides;
use crate::combinat::{binom_int, rising_factorial};
use crate::partitions::Partition;
use crate::{Error, Integer, Rational, Result};

pub const DEFAULT_ORACLE_CAP: usize = 16;

/// Coefficients of `∏_i ((1+q)^{λ_i} - 1)`, index = power of `q`.
pub fn gen_binom_row(lambda: &Partition) -> Vec<Integer> {
    let mut row = vec![Integer::one()];
    for (part, mult) in lambda.multiplicities() {
        // (1+q)^part - 1
        let factor: Vec<Integer> = (0..=part as i64)
            .map(|k| if k == 0 { Integer::zero() } else { binom_int(part as i64, k) })
            .collect();
        for _ in 0..mult {
            let mut next = vec![Integer::zero(); row.len() + factor.len() - 1];
            for (i, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in factor.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            row = next;
        }
    }
    row
}

/// `<λ, r>`: the coefficient of `q^r` in `∏_i ((1+q)^{λ_i} - 1)`.
///
/// Counts the `r`-subsets of the Ferrers diagram meeting every row. Zero
/// unless `l(λ) ≤ r ≤ |λ|`; `<∅, 0> = 1`.
pub fn gen_binom(lambda: &Partition, r: usize) -> Integer {
    if r < lambda.len() || r > lambda.weight() {
        return Integer::zero();
    }
    gen_binom_row(lambda).swap_remove(r)
}

/// `<λ, r>` by exhaustive enumeration of `r`-subsets of cells.
pub fn gen_binom_oracle(lambda: &Partition, r: usize, cap: usize) -> Result<Integer> {
    let weight = lambda.weight();
    if weight > cap {
        return Err(Error::OracleCapExceeded { weight, cap });
    }
    let cells = lambda.cells();
    let row_masks: Vec<u64> = (1..=lambda.len())
        .map(|row| {
            cells
                .iter()
                .enumerate()
                .filter(|(_, &(i, _))| i == row)
                .fold(0u64, |m, (bit, _)| m | (1 << bit))
        })
        .collect();
    let count = (0u64..1 << weight)
        .filter(|mask| mask.count_ones() as usize == r)
        .filter(|mask| row_masks.iter().all(|row| mask & row != 0))
        .count();
    Ok(Integer::from(count))
}

/// `Σ_i (μ_i)_s`
pub fn sum_rising(mu: &Partition, s: usize) -> Integer {
    mu.parts().iter().map(|&p| rising_factorial(p, s)).sum()
}

/// `Σ_{i≥1} m_i(μ) (i)_s`, the same value grouped by part size.
pub fn sum_rising_by_multiplicity(mu: &Partition, s: usize) -> Integer {
    mu.multiplicities()
        .into_iter()
        .map(|(i, m)| Integer::from(m) * rising_factorial(i, s))
        .sum()
}

/// `<λ ∪ {i}, r>` against `Σ_{j=1}^{i} C(i,j) <λ, r-j>`.
pub fn recurrence_sides(lambda: &Partition, i: usize, r: usize) -> Sides<Integer> {
    let lhs = gen_binom(&lambda.add_part(i), r);
    let rhs = (1..=i.min(r))
        .map(|j| binom_int(i as i64, j as i64) * gen_binom(lambda, r - j))
        .sum();
    Sides::new(lhs, rhs)
}

/// `<μ, l(μ) + offset>` against its closed form, for `offset` 0 or 1:
/// `∏ μ_i` and `(|μ| - l(μ)) ∏ μ_i / 2`.
pub fn length_relation_sides(mu: &Partition, offset: usize) -> Result<Sides<Rational>> {
    let lhs = Rational::from_integer(gen_binom(mu, mu.len() + offset));
    let product = Rational::from_integer(mu.part_product());
    let rhs = match offset {
        0 => product,
        1 => product * Rational::new(Integer::from(mu.weight() - mu.len()), Integer::from(2)),
        _ => return Err(Error::InvalidParameter(format!("offset {offset} must be 0 or 1"))),
    };
    Ok(Sides::new(lhs, rhs))
}
