//! Identities carrying the extra indeterminate `z`, which marks part sizes
//! through `Σ_i m_i(μ) z^{i-1}`.

use super::scalar::require_p;
use super::univariate::positive;
use super::{sign, weighted_partitions, Sides};
use crate::combinat::{binom_int, composition_count, factorial, stirling_unsigned};
use crate::partitions::{enumerate, Partition};
use crate::polyalg::{binom_poly, h_one_power, MultiPoly, UniPoly};
use crate::{Integer, Rational, Result};

pub const XZ: [&str; 2] = ["X", "z"];

fn term(vars: &[&str], exps: &[u32], c: Rational) -> MultiPoly {
    MultiPoly::monomial(vars, exps, c)
}

/// `Σ_i m_i(μ) z^{i-1}` times `c · X^{xdeg}`.
fn part_marker(mu: &Partition, xdeg: u32, c: &Rational) -> MultiPoly {
    mu.multiplicities()
        .into_iter()
        .map(|(i, m)| term(&XZ, &[xdeg, i as u32 - 1], c * Rational::from_integer(m.into())))
        .fold(MultiPoly::zero(&XZ), |acc, t| &acc + &t)
}

/// `Σ_{|μ|=n} X^{l(μ)-1}/z_μ Σ_i m_i(μ) z^{i-1}` against
/// `Σ_{i=1}^{n} h_{n-i}(1^X) z^{i-1}/i`.
pub fn thm5_sides(n: usize) -> Result<Sides<MultiPoly>> {
    positive("n", n)?;
    let lhs = enumerate(n)
        .iter()
        .map(|mu| part_marker(mu, mu.len() as u32 - 1, &Rational::new(1.into(), mu.zeta())))
        .fold(MultiPoly::zero(&XZ), |acc, t| &acc + &t);
    let rhs = (1..=n)
        .map(|i| {
            let zi = term(&XZ, &[0, i as u32 - 1], Rational::new(1.into(), Integer::from(i)));
            &h_one_power(n - i).to_multi("X", &XZ) * &zi
        })
        .fold(MultiPoly::zero(&XZ), |acc, t| &acc + &t);
    Ok(Sides::new(lhs, rhs))
}

/// `(i, j, C(i,j)/i · C(n-i-1, r-j-1))` over the summation range
/// `1 ≤ j ≤ r`, `j ≤ i ≤ n-r+j`, skipping vanishing terms.
///
/// `C(n-i-1, r-j-1)` is read as the number of compositions of `n-i` into
/// `r-j` parts, which is `[i = n]` when `j = r`.
fn z_range(n: usize, r: usize) -> Vec<(usize, usize, Rational)> {
    let (n, r) = (n as i64, r as i64);
    let mut out = Vec::new();
    for j in 1..=r {
        for i in j..=n - r + j {
            let c = binom_int(i, j) * composition_count(n - i, r - j);
            if c != Integer::from(0) {
                out.push((i as usize, j as usize, Rational::new(c, Integer::from(i))));
            }
        }
    }
    out
}

/// `Σ (-1)^{r-l(μ)} <μ,r>/z_μ X^{l(μ)-1} Σ_i m_i(μ) z^{i-1}` against
/// `Σ_{j=1}^{r} Σ_{i=j}^{n-r+j} (-1)^{j-1} C(X, r-j) C(i,j)/i C(n-i-1, r-j-1) z^{i-1}`.
pub fn thm7_sides(n: usize, r: usize) -> Result<Sides<MultiPoly>> {
    positive("n", n)?;
    positive("r", r)?;
    let lhs = weighted_partitions(n, r, None)
        .into_iter()
        .map(|(mu, w)| {
            let c = sign(r as i64 - mu.len() as i64) * w;
            part_marker(&mu, mu.len() as u32 - 1, &c)
        })
        .fold(MultiPoly::zero(&XZ), |acc, t| &acc + &t);
    let rhs = z_range(n, r)
        .into_iter()
        .map(|(i, j, c)| {
            let c = sign(j as i64 - 1) * c;
            &binom_poly(r - j).to_multi("X", &XZ) * &term(&XZ, &[0, i as u32 - 1], c)
        })
        .fold(MultiPoly::zero(&XZ), |acc, t| &acc + &t);
    Ok(Sides::new(lhs, rhs))
}

/// Both sides of [`thm7_sides`] under `z^k -> h_k(1^{s+1}) = C(k+s, k)`,
/// scaled by `s!`. These coincide with the two sides of [`super::thm1_sides`].
pub fn thm7_at_ones(n: usize, r: usize, s: usize) -> Result<Sides<UniPoly>> {
    positive("s", s)?;
    let sides = thm7_sides(n, r)?;
    let scale = Rational::from_integer(factorial(s));
    let h = |k: u32| Rational::from_integer(binom_int(k as i64 + s as i64, k as i64));
    Ok(sides.map(|p| {
        p.specialize_powers("z", h)
            .scale(&scale)
            .to_uni("X")
            .expect("only X remains after eliminating z")
    }))
}

/// The `X^{p-1}` coefficient of [`thm7_sides`] up to the sign `(-1)^{r-p}`:
/// `Σ_{|μ|=n, l(μ)=p} <μ,r>/z_μ Σ_i m_i(μ) z^{i-1}` against
/// `Σ_j Σ_i |s(r-j, p-1)| / (i (r-j)!) C(i,j) C(n-i-1, r-j-1) z^{i-1}`.
pub fn thm8_sides(n: usize, r: usize, p: usize) -> Result<Sides<MultiPoly>> {
    positive("n", n)?;
    positive("r", r)?;
    require_p(p, r)?;
    let z_only = ["z"];
    let lhs = weighted_partitions(n, r, Some(p))
        .into_iter()
        .map(|(mu, w)| part_marker(&mu, 0, &w))
        .fold(MultiPoly::zero(&XZ), |acc, t| &acc + &t)
        .with_variables(&z_only)
        .expect("X-degree 0");
    let rhs = z_range(n, r)
        .into_iter()
        .map(|(i, j, c)| {
            let weight = Rational::new(stirling_unsigned(r - j, p as i64 - 1), factorial(r - j));
            term(&z_only, &[i as u32 - 1], c * weight)
        })
        .fold(MultiPoly::zero(&z_only), |acc, t| &acc + &t);
    Ok(Sides::new(lhs, rhs))
}
