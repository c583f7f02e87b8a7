use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{finish_sum, push_term, rat, Canonical, MultiPoly};
use crate::Rational;

/// Polynomial in `X` with rational coefficients. Zero coefficients are never
/// stored, so derived equality is coefficient-wise equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: BTreeMap<usize, Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn monomial(degree: usize, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, c);
        p
    }

    /// Coefficients listed from degree 0 upward.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, degree: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero `(degree, coefficient)` pairs, ascending by degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        // Horner from the top degree down
        let Some(top) = self.degree() else {
            return Rational::zero();
        };
        (0..=top).rev().fold(Rational::zero(), |acc, k| acc * at + self.coeff(k))
    }

    /// `p(X + c)`
    pub fn shift(&self, c: &Rational) -> Self {
        let Some(top) = self.degree() else {
            return Self::zero();
        };
        let step = Self::from_coeffs([c.clone(), Rational::one()]);
        (0..=top)
            .rev()
            .fold(Self::zero(), |acc, k| &(&acc * &step) + &Self::constant(self.coeff(k)))
    }

    /// `p(-X)`
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, v)| (k, if k % 2 == 0 { v.clone() } else { -v }))
                .collect(),
        }
    }

    /// `X · p`
    pub fn mul_x(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k + 1, v.clone())).collect(),
        }
    }

    /// Embeds into a multivariate polynomial, renaming `X` to `var`.
    pub fn to_multi(&self, var: &str, vars: &[&str]) -> MultiPoly {
        let index = vars
            .iter()
            .position(|v| *v == var)
            .unwrap_or_else(|| panic!("variable `{var}` not declared"));
        let mut out = MultiPoly::zero(vars);
        for (&k, c) in &self.coeffs {
            let mut exps = vec![0u32; vars.len()];
            exps[index] = k as u32;
            out = &out + &MultiPoly::monomial(vars, &exps, c.clone());
        }
        out
    }
}

impl Canonical for UniPoly {
    fn canonical(&self) -> String {
        let mut out = String::new();
        for (&k, c) in self.coeffs.iter().rev() {
            let mono = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            push_term(&mut out, c, &mono);
        }
        finish_sum(out)
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl From<i64> for UniPoly {
    fn from(v: i64) -> Self {
        Self::constant(rat(v))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $method:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $tr::$method(&self, &rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(UniPoly, Add add, Sub sub, Mul mul);

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> Self {
        iter.fold(UniPoly::zero(), |acc, p| &acc + &p)
    }
}
