//! Factorials, binomial coefficients and Stirling numbers of the first kind.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use crate::Integer;

pub fn factorial(n: usize) -> Integer {
    (1..=n).map(Integer::from).product()
}

/// `(a)_n = a(a+1)…(a+n-1)`
pub fn rising_factorial(a: impl Into<Integer>, n: usize) -> Integer {
    let a = a.into();
    (0..n).map(|k| &a + k).product()
}

/// `[a]_n = a(a-1)…(a-n+1)`
pub fn falling_factorial(a: impl Into<Integer>, n: usize) -> Integer {
    let a = a.into();
    (0..n).map(|k| &a - k).product()
}

/// `C(a, n) = [a]_n / n!` for any integer `a`; zero when `n < 0`.
pub fn binom_int(a: impl Into<Integer>, n: i64) -> Integer {
    if n < 0 {
        return Integer::zero();
    }
    let n = n as usize;
    falling_factorial(a, n) / factorial(n)
}

/// Number of compositions of `m` into exactly `k` positive parts.
///
/// This is `C(m-1, k-1)` for `m, k >= 1`, extended by the coefficient of
/// `y^{m-k}` in `(1-y)^{-k}`: one composition of 0 into 0 parts, none of a
/// positive `m` into 0 parts, and zero for negative arguments. Sums that
/// carry a `C(m-1, k-1)` factor down to `k = 0` need this reading.
pub fn composition_count(m: i64, k: i64) -> Integer {
    if m < 0 || k < 0 || k > m {
        return Integer::zero();
    }
    if k == 0 {
        return if m == 0 { Integer::one() } else { Integer::zero() };
    }
    binom_int(m - 1, k - 1)
}

fn stirling_table() -> &'static RwLock<Vec<Vec<Integer>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<Integer>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![Integer::one()]]))
}

/// Row `n` of signed Stirling numbers, `s(n, 0..=n)`.
pub fn stirling_row(n: usize) -> Vec<Integer> {
    {
        let table = stirling_table().read().expect("stirling table poisoned");
        if let Some(row) = table.get(n) {
            return row.clone();
        }
    }
    let mut table = stirling_table().write().expect("stirling table poisoned");
    while table.len() <= n {
        let m = table.len() - 1;
        let prev = &table[m];
        // s(m+1, k) = s(m, k-1) - m s(m, k)
        let next: Vec<Integer> = (0..=m + 1)
            .map(|k| {
                let left = if k >= 1 { prev[k - 1].clone() } else { Integer::zero() };
                let right = prev.get(k).map(|v| v * m).unwrap_or_default();
                left - right
            })
            .collect();
        table.push(next);
    }
    table[n].clone()
}

/// `s(n, k)`, the coefficient of `X^k` in `[X]_n`.
pub fn stirling_signed(n: usize, k: i64) -> Integer {
    if k < 0 || k as usize > n {
        return Integer::zero();
    }
    stirling_row(n).swap_remove(k as usize)
}

/// `|s(n, k)|`, the coefficient of `X^k` in `(X)_n`.
pub fn stirling_unsigned(n: usize, k: i64) -> Integer {
    stirling_signed(n, k).abs()
}
