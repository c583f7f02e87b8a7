//! Brute-force references that share no code with the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Number of `r`-subsets of the Ferrers diagram of `parts` meeting every row.
pub fn covering_subsets(parts: &[usize], r: usize) -> u64 {
    let cells: Vec<usize> = parts.iter().enumerate().flat_map(|(row, &len)| std::iter::repeat_n(row, len)).collect();
    cells
        .iter()
        .combinations(r)
        .filter(|pick| (0..parts.len()).all(|row| pick.iter().any(|&&c| c == row)))
        .count() as u64
}

/// Cycle type (sorted descending) of every permutation of `0..n`, counted.
pub fn cycle_type_counts(n: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut counts = BTreeMap::new();
    for perm in (0..n).permutations(n) {
        let mut seen = vec![false; n];
        let mut cycle_type = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut len, mut i) = (0, start);
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            cycle_type.push(len);
        }
        cycle_type.sort_unstable_by(|a, b| b.cmp(a));
        *counts.entry(cycle_type).or_insert(0) += 1;
    }
    counts
}

/// `p(n)` via Euler's pentagonal number recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as i64;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let mut any = false;
            for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
                if g as usize <= m {
                    total += sign * p[m - g as usize];
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        p[m] = total;
    }
    p[n] as u64
}

/// Coefficients of `X(X-1)…(X-n+1)`, index = power of `X`.
pub fn falling_coeffs(n: usize) -> Vec<i128> {
    let mut c = vec![1i128];
    for k in 0..n as i128 {
        let mut next = vec![0i128; c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= k * a;
        }
        c = next;
    }
    c
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `((1-y)/(1-y(1+q)))^x` written as `Σ_j C(-x, j) (-qy/(1-y))^j`, i.e.
/// `Σ_j (x)_j/j! q^j y^j Σ_m C(m+j-1, m) y^m`, keyed by `(x, y, q)` exponents
/// and truncated at `y, q ≤ cap`.
pub fn theorem9_binomial_route(cap: u32) -> BTreeMap<(u32, u32, u32), BigRational> {
    let mut out: BTreeMap<(u32, u32, u32), BigRational> = BTreeMap::new();
    out.insert((0, 0, 0), BigRational::from_integer(1.into()));
    for j in 1..=cap {
        // (x)_j has coefficients |s(j, a)|
        let rising: Vec<i128> = falling_coeffs(j as usize).iter().map(|c| c.abs()).collect();
        for m in 0..=cap - j {
            let tail = binom((m + j - 1) as u64, m as u64);
            for (a, &c) in rising.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let v = BigRational::new(BigInt::from(c) * &tail, BigInt::from(factorial(j as usize)));
                *out.entry((a as u32, j + m, j)).or_insert_with(|| BigRational::from_integer(0.into())) += v;
            }
        }
    }
    out
}
