//! The weighted partition polynomials `P_jk` and the formal series
//! expansion they enter, truncated in `u`.

use super::univariate::{positive, require};
use super::{gen_binom, sign, weighted_partitions, Sides};
use crate::combinat::{binom_int, factorial, rising_factorial};
use crate::partitions::enumerate;
use crate::polyalg::{binom_poly_shifted, MultiPoly, TruncatedSeries};
use crate::{Rational, Result};

fn x_name(i: usize) -> String {
    format!("X_{i}")
}

/// `[u, X_0, X_1, …, X_umax]`
pub fn conj_variables(umax: usize) -> Vec<String> {
    std::iter::once("u".to_string())
        .chain((0..=umax).map(x_name))
        .collect()
}

/// `P_jk = Σ_{|μ|=j} <μ,k>/z_μ ∏_i X_i^{m_i(μ)}` over `X_1, …, X_j`.
pub fn conj_p(j: usize, k: usize) -> MultiPoly {
    let names: Vec<String> = (1..=j).map(x_name).collect();
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut out = MultiPoly::zero(&vars);
    for mu in enumerate(j) {
        let w = gen_binom(&mu, k);
        if w == 0.into() {
            continue;
        }
        let mut exps = vec![0u32; j];
        for (part, mult) in mu.multiplicities() {
            exps[part - 1] = mult as u32;
        }
        out = &out + &MultiPoly::monomial(&vars, &exps, Rational::new(w, mu.zeta()));
    }
    out
}

/// Both sides of the `u`-expansion, truncated at `u^umax`:
///
/// `Σ_{|μ|=n} (-1)^{r-l(μ)} <μ,r>/z_μ ∏_i (X_0 + Σ_{p≥1} u^p (i)_p/p! X_p)^{m_i(μ)}`
/// against
/// `Σ_j u^j C(n+j-1, n-r) Σ_{k=0}^{min(r,j)} C(X_0 - j, r - k) P_jk`.
pub fn conj2_sides(n: usize, r: usize, umax: usize) -> Result<Sides<TruncatedSeries>> {
    positive("n", n)?;
    positive("r", r)?;
    require(umax >= 1, || "umax must be at least 1".to_string())?;
    let names = conj_variables(umax);
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let caps = [("u", umax as u32)];
    let series = |p: MultiPoly| TruncatedSeries::new(p, &caps);

    // X_0 + Σ_p u^p (i)_p/p! X_p
    let factor = |i: usize| {
        let mut p = MultiPoly::var(&vars, "X_0");
        for q in 1..=umax {
            let mut exps = vec![0u32; vars.len()];
            exps[0] = q as u32;
            exps[q + 1] = 1;
            let c = Rational::new(rising_factorial(i, q), factorial(q));
            p = &p + &MultiPoly::monomial(&vars, &exps, c);
        }
        series(p)
    };

    let mut lhs = series(MultiPoly::zero(&vars));
    for (mu, w) in weighted_partitions(n, r, None) {
        let mut product = lhs.one_like();
        for (i, m) in mu.multiplicities() {
            product = &product * &factor(i).pow(m as u32);
        }
        lhs = &lhs + &product.scale(&(sign(r as i64 - mu.len() as i64) * w));
    }

    let mut rhs = series(MultiPoly::zero(&vars));
    for j in 0..=umax {
        let outer = binom_int((n + j - 1) as i64, n as i64 - r as i64);
        if outer == 0.into() {
            continue;
        }
        let mut inner = MultiPoly::zero(&vars);
        for k in 0..=r.min(j) {
            let pjk = conj_p(j, k);
            if pjk.is_zero() {
                continue;
            }
            let shifted = binom_poly_shifted(-(j as i64), r - k).to_multi("X_0", &vars);
            inner = &inner + &(&shifted * &pjk);
        }
        let mut exps = vec![0u32; vars.len()];
        exps[0] = j as u32;
        let uj = MultiPoly::monomial(&vars, &exps, Rational::from_integer(outer));
        rhs = &rhs + &series(&uj * &inner);
    }
    let align = |s: TruncatedSeries| s.with_variables(&vars).expect("declared variables");
    Ok(Sides::new(align(lhs), align(rhs)))
}

/// The `r = n` case.
pub fn conj1_sides(n: usize, umax: usize) -> Result<Sides<TruncatedSeries>> {
    conj2_sides(n, n, umax)
}
