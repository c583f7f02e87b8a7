use super::{sign, weighted_partitions, Sides};
use crate::combinat::{binom_int, factorial};
use crate::identities::sum_rising;
use crate::partitions::enumerate;
use crate::polyalg::{binom_multi, binom_poly, binom_poly_shifted, h_one_power, rat, MultiPoly, UniPoly};
use crate::{Error, Rational, Result};

pub(crate) fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what()))
    }
}

pub(crate) fn positive(name: &str, v: usize) -> Result<()> {
    require(v >= 1, || format!("{name} must be at least 1"))
}

fn x_power(k: usize, c: Rational) -> UniPoly {
    UniPoly::monomial(k, c)
}

/// Signed or unsigned `Σ_{|μ|=n} <μ,r>/z_μ X^{l(μ)-1} Σ_i (μ_i)_s`.
fn rising_partition_sum(n: usize, r: usize, s: usize, signed: bool) -> UniPoly {
    weighted_partitions(n, r, None)
        .into_iter()
        .map(|(mu, w)| {
            let l = mu.len();
            let sgn = if signed { sign(r as i64 - l as i64) } else { rat(1) };
            x_power(l - 1, sgn * w * Rational::from_integer(sum_rising(&mu, s)))
        })
        .sum()
}

/// `Σ (-1)^{r-l(μ)} <μ,r>/z_μ X^{l(μ)-1} Σ_i (μ_i)_s` against
/// `(s-1)! C(n+s-1, n-r) [C(X,r) - C(X-s,r)]`.
pub fn thm1_sides(n: usize, r: usize, s: usize) -> Result<Sides<UniPoly>> {
    positive("n", n)?;
    positive("r", r)?;
    positive("s", s)?;
    let lhs = rising_partition_sum(n, r, s, true);
    let factor = Rational::from_integer(factorial(s - 1) * binom_int((n + s - 1) as i64, n as i64 - r as i64));
    let rhs = (&binom_poly(r) - &binom_poly_shifted(-(s as i64), r)).scale(&factor);
    Ok(Sides::new(lhs, rhs))
}

/// Unsigned form: `Σ <μ,r>/z_μ X^{l(μ)-1} Σ_i (μ_i)_s` against
/// `(s-1)! C(n+s-1, n-r) [C(X+r+s-1, r) - C(X+r-1, r)]`.
pub fn thm1_alt_sides(n: usize, r: usize, s: usize) -> Result<Sides<UniPoly>> {
    positive("n", n)?;
    positive("r", r)?;
    positive("s", s)?;
    let lhs = rising_partition_sum(n, r, s, false);
    let factor = Rational::from_integer(factorial(s - 1) * binom_int((n + s - 1) as i64, n as i64 - r as i64));
    let rhs = (&binom_poly_shifted((r + s - 1) as i64, r) - &binom_poly_shifted(r as i64 - 1, r)).scale(&factor);
    Ok(Sides::new(lhs, rhs))
}

/// `Σ (-1)^{n-l(μ)} X^{l(μ)-1}/z_μ Σ_i (μ_i)_s` against
/// `(s-1)! [C(X,n) - C(X-s,n)]`; no generalized binomial involved.
pub fn thm4_sides(n: usize, s: usize) -> Result<Sides<UniPoly>> {
    positive("n", n)?;
    positive("s", s)?;
    let lhs = enumerate(n)
        .into_iter()
        .map(|mu| {
            let c = sign(n as i64 - mu.len() as i64) * Rational::new(sum_rising(&mu, s), mu.zeta());
            x_power(mu.len() - 1, c)
        })
        .sum();
    let rhs = (&binom_poly(n) - &binom_poly_shifted(-(s as i64), n)).scale(&Rational::from_integer(factorial(s - 1)));
    Ok(Sides::new(lhs, rhs))
}

/// `Σ X^{l(μ)-1}/z_μ Σ_i (μ_i)_s` against `(s-1)! [C(X+n+s-1,n) - C(X+n-1,n)]`.
pub fn thm4_alt_sides(n: usize, s: usize) -> Result<Sides<UniPoly>> {
    positive("n", n)?;
    positive("s", s)?;
    let lhs = enumerate(n)
        .into_iter()
        .map(|mu| x_power(mu.len() - 1, Rational::new(sum_rising(&mu, s), mu.zeta())))
        .sum();
    let rhs = (&binom_poly_shifted((n + s - 1) as i64, n) - &binom_poly_shifted(n as i64 - 1, n))
        .scale(&Rational::from_integer(factorial(s - 1)));
    Ok(Sides::new(lhs, rhs))
}

/// `Σ (-1)^{n-l(μ)} X^{l(μ)}/z_μ` against `C(X, n)`.
pub fn classical_sides(n: usize) -> Result<Sides<UniPoly>> {
    positive("n", n)?;
    let lhs = enumerate(n)
        .into_iter()
        .map(|mu| x_power(mu.len(), sign(n as i64 - mu.len() as i64) * Rational::new(1.into(), mu.zeta())))
        .sum();
    Ok(Sides::new(lhs, binom_poly(n)))
}

/// `Σ X^{l(μ)}/z_μ` against `C(X+n-1, n)`.
pub fn classical_alt_sides(n: usize) -> Result<Sides<UniPoly>> {
    positive("n", n)?;
    let lhs = enumerate(n)
        .into_iter()
        .map(|mu| x_power(mu.len(), Rational::new(1.into(), mu.zeta())))
        .sum();
    Ok(Sides::new(lhs, binom_poly_shifted(n as i64 - 1, n)))
}

/// `Σ (-1)^{r-l(μ)} <μ,r>/z_μ X^{l(μ)}` against `C(n-1, r-1) C(X, r)`.
pub fn eq2_sides(n: usize, r: usize) -> Result<Sides<UniPoly>> {
    positive("n", n)?;
    positive("r", r)?;
    let lhs = weighted_partitions(n, r, None)
        .into_iter()
        .map(|(mu, w)| x_power(mu.len(), sign(r as i64 - mu.len() as i64) * w))
        .sum();
    let rhs = binom_poly(r).scale(&Rational::from_integer(binom_int(n as i64 - 1, r as i64 - 1)));
    Ok(Sides::new(lhs, rhs))
}

const XY: [&str; 2] = ["X", "Y"];

fn xy_sum(shift: i64) -> MultiPoly {
    &(&MultiPoly::var(&XY, "X") + &MultiPoly::var(&XY, "Y")) + &MultiPoly::constant(&XY, rat(shift))
}

/// `C(X+Y, n)` against `Σ_i C(X, n-i) C(Y, i)`.
pub fn chu_vandermonde_sides(n: usize) -> Sides<MultiPoly> {
    let lhs = binom_multi(&xy_sum(0), n);
    let rhs = (0..=n)
        .map(|i| &binom_poly(n - i).to_multi("X", &XY) * &binom_poly(i).to_multi("Y", &XY))
        .fold(MultiPoly::zero(&XY), |acc, t| &acc + &t);
    Sides::new(lhs, rhs)
}

/// `h_n(1^{X+Y})` against `Σ_i h_{n-i}(1^X) h_i(1^Y)`.
pub fn h_convolution_sides(n: usize) -> Sides<MultiPoly> {
    let lhs = binom_multi(&xy_sum(n as i64 - 1), n);
    let rhs = (0..=n)
        .map(|i| &h_one_power(n - i).to_multi("X", &XY) * &h_one_power(i).to_multi("Y", &XY))
        .fold(MultiPoly::zero(&XY), |acc, t| &acc + &t);
    Sides::new(lhs, rhs)
}
