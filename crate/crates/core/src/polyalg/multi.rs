use std::borrow::Cow;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::uni::forward_owned;
use super::{finish_sum, push_term, rat, Canonical, UniPoly};
use crate::Rational;

/// Sparse polynomial over a declared, ordered list of named variables.
///
/// Terms map dense exponent vectors (one entry per declared variable) to
/// nonzero rational coefficients.
#[derive(Clone, Debug, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        for (k, v) in vars.iter().enumerate() {
            assert!(!vars[..k].contains(v), "variable `{v}` declared twice");
        }
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let exps = vec![0; vars.len()];
        Self::monomial(vars, &exps, c)
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut exps = vec![0; vars.len()];
        let index = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("variable `{name}` not declared"));
        exps[index] = 1;
        Self::monomial(vars, &exps, Rational::one())
    }

    pub fn monomial(vars: &[&str], exps: &[u32], c: Rational) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exps.to_vec(), c);
        p
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of the monomial given as `(name, exponent)` pairs; unnamed
    /// variables have exponent 0.
    pub fn coeff(&self, monomial: &[(&str, u32)]) -> Rational {
        let mut exps = vec![0u32; self.vars.len()];
        for &(name, e) in monomial {
            match self.var_index(name) {
                Some(i) => exps[i] = e,
                None if e == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    pub fn degree_in(&self, name: &str) -> Option<u32> {
        let i = self.var_index(name)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable that occurs with a positive exponent. Returns `None` otherwise.
    pub fn with_variables(&self, vars: &[&str]) -> Option<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut out = Self::zero(vars);
        for (exps, c) in &self.terms {
            let mut target = vec![0u32; vars.len()];
            for (k, &e) in exps.iter().enumerate() {
                match map[k] {
                    Some(j) => target[j] = e,
                    None if e == 0 => {}
                    None => return None,
                }
            }
            out.add_term(target, c.clone());
        }
        Some(out)
    }

    pub(crate) fn aligned<'a>(a: &'a Self, b: &'a Self) -> (Cow<'a, Self>, Cow<'a, Self>) {
        if a.vars == b.vars {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let mut union: Vec<&str> = a.variables();
        for v in &b.vars {
            if !union.contains(&v.as_str()) {
                union.push(v);
            }
        }
        let a2 = a.with_variables(&union).expect("superset");
        let b2 = b.with_variables(&union).expect("superset");
        (Cow::Owned(a2), Cow::Owned(b2))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        }
        out
    }

    /// Product keeping only monomials accepted by `keep`. Both operands must
    /// already share a variable list.
    pub(crate) fn mul_filtered(&self, other: &Self, keep: impl Fn(&[u32]) -> bool) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        let mut exps = vec![0u32; self.vars.len()];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for (k, slot) in exps.iter_mut().enumerate() {
                    *slot = ea[k] + eb[k];
                }
                if keep(&exps) {
                    out.add_term(exps.clone(), ca * cb);
                }
            }
        }
        out
    }

    pub(crate) fn retain(&mut self, keep: impl Fn(&[u32]) -> bool) {
        self.terms.retain(|e, _| keep(e));
    }

    pub fn pow(&self, n: u32) -> Self {
        let vars = self.variables();
        (0..n).fold(Self::one(&vars), |acc, _| &acc * self)
    }

    /// Coefficient of `name^k`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, name: &str, k: u32) -> Self {
        let Some(i) = self.var_index(name) else {
            let vars = self.variables();
            return if k == 0 { self.clone() } else { Self::zero(&vars) };
        };
        let mut vars = self.variables();
        vars.remove(i);
        let mut out = Self::zero(&vars);
        for (exps, c) in &self.terms {
            if exps[i] == k {
                let mut rest = exps.clone();
                rest.remove(i);
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Applies the linear map `name^k -> value(k)`, eliminating `name`.
    pub fn specialize_powers(&self, name: &str, value: impl Fn(u32) -> Rational) -> Self {
        let Some(i) = self.var_index(name) else {
            return self.clone();
        };
        let mut vars = self.variables();
        vars.remove(i);
        let mut out = Self::zero(&vars);
        for (exps, c) in &self.terms {
            let mut rest = exps.clone();
            let k = rest.remove(i);
            out.add_term(rest, c * value(k));
        }
        out
    }

    /// Converts to a univariate polynomial in `name` when no other variable
    /// occurs.
    pub fn to_uni(&self, name: &str) -> Option<UniPoly> {
        let i = self.var_index(name);
        let mut out = UniPoly::zero();
        for (exps, c) in &self.terms {
            let k = i.map(|i| exps[i]).unwrap_or(0);
            if exps.iter().enumerate().any(|(j, &e)| Some(j) != i && e > 0) {
                return None;
            }
            out = &out + &UniPoly::monomial(k as usize, c.clone());
        }
        Some(out)
    }

    fn render_monomial(&self, exps: &[u32]) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.vars.iter().zip(exps) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }

    /// Monomials in canonical order: total degree descending, then
    /// lexicographically descending exponent vectors in declared order.
    pub fn sorted_terms(&self) -> Vec<(&[u32], &Rational)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        terms
    }
}

impl Canonical for MultiPoly {
    fn canonical(&self) -> String {
        let mut out = String::new();
        for (exps, c) in self.sorted_terms() {
            push_term(&mut out, c, &self.render_monomial(exps));
        }
        finish_sum(out)
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::aligned(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::aligned(self, rhs);
        let mut out = a.into_owned();
        for (e, c) in &b.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::aligned(self, rhs);
        let mut out = a.into_owned();
        for (e, c) in &b.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::aligned(self, rhs);
        a.mul_filtered(&b, |_| true)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&rat(-1))
    }
}

forward_owned!(MultiPoly, Add add, Sub sub, Mul mul);
