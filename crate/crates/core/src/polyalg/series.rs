use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::uni::forward_owned;
use super::{rat, Canonical, MultiPoly};
use crate::{Error, Rational, Result};

/// A multivariate polynomial standing for a formal power series, with every
/// monomial above a per-variable exponent cap discarded. Variables without a
/// cap are untruncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    body: MultiPoly,
    caps: BTreeMap<String, u32>,
}

impl TruncatedSeries {
    pub fn new(body: MultiPoly, caps: &[(&str, u32)]) -> Self {
        let caps = caps.iter().map(|&(v, c)| (v.to_string(), c)).collect();
        Self::from_parts(body, caps)
    }

    fn from_parts(mut body: MultiPoly, caps: BTreeMap<String, u32>) -> Self {
        let limits = limits(&body, &caps);
        body.retain(|e| admits(&limits, e));
        Self { body, caps }
    }

    pub fn body(&self) -> &MultiPoly {
        &self.body
    }

    pub fn into_body(self) -> MultiPoly {
        self.body
    }

    pub fn caps(&self) -> &BTreeMap<String, u32> {
        &self.caps
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn coeff(&self, monomial: &[(&str, u32)]) -> Rational {
        self.body.coeff(monomial)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            body: self.body.scale(c),
            caps: self.caps.clone(),
        }
    }

    pub fn one_like(&self) -> Self {
        Self {
            body: MultiPoly::one(&self.body.variables()),
            caps: self.caps.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(self.one_like(), |acc, _| &acc * self)
    }

    pub fn exp(&self) -> Result<Self> {
        series_exp(self)
    }

    /// Same series re-expressed over a different variable list; see
    /// [`MultiPoly::with_variables`].
    pub fn with_variables(&self, vars: &[&str]) -> Option<Self> {
        Some(Self {
            body: self.body.with_variables(vars)?,
            caps: self.caps.clone(),
        })
    }

    fn merged(a: &Self, b: &Self) -> (MultiPoly, MultiPoly, BTreeMap<String, u32>) {
        let (pa, pb) = MultiPoly::aligned(&a.body, &b.body);
        let mut caps = a.caps.clone();
        for (v, &c) in &b.caps {
            caps.entry(v.clone()).and_modify(|x| *x = (*x).min(c)).or_insert(c);
        }
        (pa.into_owned(), pb.into_owned(), caps)
    }
}

fn limits(body: &MultiPoly, caps: &BTreeMap<String, u32>) -> Vec<Option<u32>> {
    body.variables().iter().map(|v| caps.get(*v).copied()).collect()
}

fn admits(limits: &[Option<u32>], exps: &[u32]) -> bool {
    limits
        .iter()
        .zip(exps)
        .all(|(cap, &e)| cap.is_none_or(|c| e <= c))
}

/// `exp(s) = Σ_k s^k / k!`, truncated.
///
/// The constant term of `s` must vanish and every monomial of `s` must
/// contain a capped variable, which bounds the number of contributing powers.
pub fn series_exp(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !s.body.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let limits = limits(&s.body, &s.caps);
    for (exps, c) in s.body.terms() {
        let capped = limits.iter().zip(exps).any(|(cap, &e)| cap.is_some() && e > 0);
        if !capped {
            let mono = MultiPoly::monomial(&s.body.variables(), exps, c.clone());
            return Err(Error::UncappedMonomial(mono.canonical()));
        }
    }
    let mut sum = s.one_like();
    let mut term = s.one_like();
    let mut k = 1i64;
    loop {
        term = (&term * s).scale(&Rational::new(1.into(), k.into()));
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
        k += 1;
    }
    Ok(sum)
}

impl Canonical for TruncatedSeries {
    fn canonical(&self) -> String {
        let mut out = self.body.canonical();
        if !self.caps.is_empty() {
            let order: Vec<String> = self
                .caps
                .iter()
                .map(|(v, c)| format!("{v}^{}", c + 1))
                .collect();
            out.push_str(&format!(" + O({})", order.join(", ")));
        }
        out
    }
}

impl std::fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let (a, b, caps) = TruncatedSeries::merged(self, rhs);
        TruncatedSeries::from_parts(&a + &b, caps)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let (a, b, caps) = TruncatedSeries::merged(self, rhs);
        TruncatedSeries::from_parts(&a - &b, caps)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let (a, b, caps) = TruncatedSeries::merged(self, rhs);
        let limits = limits(&a, &caps);
        let body = a.mul_filtered(&b, |e| admits(&limits, e));
        TruncatedSeries { body, caps }
    }
}

forward_owned!(TruncatedSeries, Add add, Sub sub, Mul mul);

impl TruncatedSeries {
    /// `c · self` for an integer `c`.
    pub fn times(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }
}
