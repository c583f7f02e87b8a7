//! Factorial and binomial polynomials, `h_i(1^X)`, and the two expansions of
//! `((1-y)/(1-y(1+q)))^x`.

use super::{rat, MultiPoly, TruncatedSeries, UniPoly};
use crate::combinat::{composition_count, factorial, stirling_unsigned};
use crate::Rational;

/// `[X]_n = X(X-1)…(X-n+1)`
pub fn falling_poly(n: usize) -> UniPoly {
    (0..n as i64).fold(UniPoly::one(), |acc, k| {
        &acc * &UniPoly::from_coeffs([rat(-k), rat(1)])
    })
}

/// `(X)_n = X(X+1)…(X+n-1)`
pub fn rising_poly(n: usize) -> UniPoly {
    (0..n as i64).fold(UniPoly::one(), |acc, k| {
        &acc * &UniPoly::from_coeffs([rat(k), rat(1)])
    })
}

/// `C(X, n) = [X]_n / n!`
pub fn binom_poly(n: usize) -> UniPoly {
    falling_poly(n).scale(&Rational::new(1.into(), factorial(n)))
}

/// `C(X + c, n)`
pub fn binom_poly_shifted(c: i64, n: usize) -> UniPoly {
    binom_poly(n).shift(&rat(c))
}

/// `h_i(1^X) = C(X + i - 1, i)`, the coefficient of `t^i` in `(1-t)^{-X}`.
pub fn h_one_power(i: usize) -> UniPoly {
    binom_poly_shifted(i as i64 - 1, i)
}

/// `C(p, n) = p(p-1)…(p-n+1) / n!` for a multivariate `p`.
pub fn binom_multi(p: &MultiPoly, n: usize) -> MultiPoly {
    let vars = p.variables();
    let falling = (0..n as i64).fold(MultiPoly::one(&vars), |acc, k| {
        &acc * &(p - &MultiPoly::constant(&vars, rat(k)))
    });
    falling.scale(&Rational::new(1.into(), factorial(n)))
}

pub(crate) const XYQ: [&str; 3] = ["x", "y", "q"];

/// `exp(x Σ_{i≥1} ((y(1+q))^i - y^i)/i)` truncated at `y ≤ ymax`, `q ≤ qmax`.
pub fn theorem9_lhs(ymax: u32, qmax: u32) -> TruncatedSeries {
    let caps = [("y", ymax), ("q", qmax)];
    let series = |p: MultiPoly| TruncatedSeries::new(p, &caps);
    let x = series(MultiPoly::var(&XYQ, "x"));
    let y = series(MultiPoly::var(&XYQ, "y"));
    let y_shifted = &y * &series(&MultiPoly::one(&XYQ) + &MultiPoly::var(&XYQ, "q"));

    let mut log_ratio = series(MultiPoly::zero(&XYQ));
    for i in 1..=ymax {
        let term = (&y_shifted.pow(i) - &y.pow(i)).scale(&Rational::new(1.into(), i.into()));
        log_ratio = &log_ratio + &term;
    }
    let result = series_exp_checked(&(&x * &log_ratio));
    debug_assert!(result.body().terms().all(|(e, _)| e[0] <= e[1]), "x-degree exceeds y-degree");
    result
}

fn series_exp_checked(s: &TruncatedSeries) -> TruncatedSeries {
    // every monomial of the exponent carries y, which is capped
    s.exp().expect("exponent has zero constant term and positive y-degree")
}

/// `Σ_{i,j,k} C(i-1, j-1) |s(j,k)| / j! · x^k y^i q^j` over `i ≤ ymax`,
/// `j ≤ qmax`. `C(i-1, j-1)` counts compositions of `i` into `j` parts, so
/// the `i = j = 0` term is 1 and terms with `j > i` vanish.
pub fn theorem9_rhs(ymax: u32, qmax: u32) -> TruncatedSeries {
    let mut body = MultiPoly::zero(&XYQ);
    for i in 0..=ymax {
        for j in 0..=qmax {
            let weight = composition_count(i as i64, j as i64);
            if weight == 0.into() {
                continue;
            }
            for k in 0..=j {
                let c = Rational::new(&weight * stirling_unsigned(j as usize, k as i64), factorial(j as usize));
                body.add_term(vec![k, i, j], c);
            }
        }
    }
    TruncatedSeries::new(body, &[("y", ymax), ("q", qmax)])
}
