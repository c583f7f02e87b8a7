use super::univariate::{positive, require};
use super::{weighted_partitions, Sides};
use crate::combinat::{binom_int, composition_count, factorial, stirling_unsigned};
use crate::identities::{sum_rising, sum_rising_by_multiplicity};
use crate::partitions::enumerate_with_length;
use crate::{Integer, Rational, Result};

pub(super) fn require_p(p: usize, r: usize) -> Result<()> {
    require(p >= 1 && p <= r, || format!("p = {p} must satisfy 1 <= p <= r = {r}"))
}

fn int_rat(v: Integer) -> Rational {
    Rational::from_integer(v)
}

/// `r! Σ_{|μ|=n, l(μ)=p} <μ,r>/z_μ Σ_i (μ_i)_s/s!` against
/// `C(n+s-1, n-r) Σ_{j=p}^{r} C(j, p-1) |s(r,j)| s^{j-p}`.
pub fn thm2_sides(n: usize, r: usize, s: usize, p: usize) -> Result<Sides<Rational>> {
    positive("n", n)?;
    positive("r", r)?;
    positive("s", s)?;
    require_p(p, r)?;
    let inner: Rational = weighted_partitions(n, r, Some(p))
        .into_iter()
        .map(|(mu, w)| w * int_rat(sum_rising(&mu, s)))
        .sum();
    let lhs = inner * Rational::new(factorial(r), factorial(s));
    let stirling_sum: Integer = (p..=r)
        .map(|j| {
            binom_int(j as i64, p as i64 - 1)
                * stirling_unsigned(r, j as i64)
                * Integer::from(s).pow((j - p) as u32)
        })
        .sum();
    let rhs = int_rat(binom_int((n + s - 1) as i64, n as i64 - r as i64) * stirling_sum);
    Ok(Sides::new(lhs, rhs))
}

/// `(r-1)! Σ_{|μ|=n, l(μ)=r} Σ_i m_i(μ) (i)_s / ∏_i m_i(μ)!` against
/// `s! C(n+s-1, n-r)`.
pub fn thm3_sides(n: usize, r: usize, s: usize) -> Result<Sides<Rational>> {
    positive("n", n)?;
    positive("r", r)?;
    positive("s", s)?;
    let sum: Rational = enumerate_with_length(n, r)
        .into_iter()
        .map(|mu| {
            let denom: Integer = mu.multiplicities().values().map(|&m| factorial(m)).product();
            Rational::new(sum_rising_by_multiplicity(&mu, s), denom)
        })
        .sum();
    let lhs = sum * int_rat(factorial(r - 1));
    let rhs = int_rat(factorial(s) * binom_int((n + s - 1) as i64, n as i64 - r as i64));
    Ok(Sides::new(lhs, rhs))
}

/// `r! Σ_{|μ|=n, l(μ)=p} <μ,r>/z_μ` against `C(n-1, r-1) |s(r,p)|`.
pub fn eq3_sides(n: usize, r: usize, p: usize) -> Result<Sides<Rational>> {
    positive("n", n)?;
    positive("r", r)?;
    require_p(p, r)?;
    let sum: Rational = weighted_partitions(n, r, Some(p)).into_iter().map(|(_, w)| w).sum();
    let lhs = sum * int_rat(factorial(r));
    let rhs = int_rat(binom_int(n as i64 - 1, r as i64 - 1) * stirling_unsigned(r, p as i64));
    Ok(Sides::new(lhs, rhs))
}

/// `C(a+b-1, d-c) C(b+c-1, c-1)` against
/// `Σ_{i=c}^{d} C(i-1, c-1) C(a-i-1, a-d-1) C(b+i-1, i-1)`.
///
/// The factors `C(i-1, c-1)` and `C(a-i-1, a-d-1)` are composition counts,
/// so `C(-1, -1) = 1` at the ends of the range (`i = c = 0`, `i = d = a`).
pub fn lemma_sides(a: i64, b: i64, c: i64, d: i64) -> Sides<Integer> {
    let lhs = binom_int(a + b - 1, d - c) * binom_int(b + c - 1, c - 1);
    let rhs = (c..=d)
        .map(|i| composition_count(i, c) * composition_count(a - i, a - d) * binom_int(b + i - 1, i - 1))
        .sum();
    Sides::new(lhs, rhs)
}

/// `h_i(1^k)/k` against `h_{i-1}(1^{k+1})/i`.
pub fn h_relation_sides(i: usize, k: usize) -> Result<Sides<Rational>> {
    positive("i", i)?;
    positive("k", k)?;
    let h = |i: usize, k: usize| binom_int((i + k) as i64 - 1, i as i64);
    let lhs = Rational::new(h(i, k), Integer::from(k));
    let rhs = Rational::new(h(i - 1, k + 1), Integer::from(i));
    Ok(Sides::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn thm2_examples() {
        let s = thm2_sides(3, 2, 1, 1).unwrap();
        assert_eq!((s.lhs.clone(), s.rhs.clone()), (r(6), r(6)));
        // (2,1) alone: 2! * <(2,1),2>/z * 3 = 6; the value 2 is eq3(3,2,2)
        let s = thm2_sides(3, 2, 1, 2).unwrap();
        assert_eq!((s.lhs.clone(), s.rhs.clone()), (r(6), r(6)));
        let e = eq3_sides(3, 2, 2).unwrap();
        assert_eq!((e.lhs, e.rhs), (r(2), r(2)));
        assert!(thm2_sides(3, 2, 1, 3).is_err());
        assert!(thm2_sides(3, 2, 1, 0).is_err());
    }

    #[test]
    fn thm2_at_p_equals_r_is_thm3() {
        for n in 1..=7 {
            for rr in 1..=n {
                for s in 1..=3 {
                    let t2 = thm2_sides(n, rr, s, rr).unwrap();
                    let t3 = thm3_sides(n, rr, s).unwrap();
                    assert!(t2.holds() && t3.holds(), "n={n} r={rr} s={s}");
                    // thm2 at p=r equals r/s! times thm3
                    let k = Rational::new(Integer::from(rr), factorial(s));
                    assert_eq!(t2.lhs, t3.lhs.clone() * k.clone());
                    assert_eq!(t2.rhs, t3.rhs * k);
                }
            }
        }
    }

    #[test]
    fn thm3_examples() {
        let s = thm3_sides(3, 2, 1).unwrap();
        assert_eq!((s.lhs, s.rhs), (r(3), r(3)));
        let s = thm3_sides(2, 1, 2).unwrap();
        assert_eq!((s.lhs, s.rhs), (r(6), r(6)));
        let s = thm3_sides(2, 4, 3).unwrap();
        assert_eq!((s.lhs, s.rhs), (r(0), r(0)));
    }

    #[test]
    fn eq3_examples() {
        let s = eq3_sides(3, 2, 1).unwrap();
        assert_eq!((s.lhs, s.rhs), (r(2), r(2)));
        let s = eq3_sides(4, 2, 2).unwrap();
        assert_eq!((s.lhs, s.rhs), (r(3), r(3)));
    }

    #[test]
    fn lemma_examples() {
        let s = lemma_sides(3, 1, 1, 2);
        assert_eq!((s.lhs.clone(), s.rhs.clone()), (Integer::from(3), Integer::from(3)));
        let s = lemma_sides(5, 2, 3, 1);
        assert_eq!((s.lhs.clone(), s.rhs.clone()), (Integer::from(0), Integer::from(0)));
        assert!(lemma_sides(4, 2, 1, 3).holds());
        // d = a needs C(-1,-1) = 1 in the last summand
        let s = lemma_sides(2, 1, 1, 2);
        assert_eq!((s.lhs, s.rhs), (Integer::from(2), Integer::from(2)));
    }

    #[test]
    fn h_relation() {
        for i in 1..=10 {
            for k in 1..=10 {
                assert!(h_relation_sides(i, k).unwrap().holds());
            }
        }
    }
}
