//! Sparse Laurent polynomials in one variable `t` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent → nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial<T = BigInt> {
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPolynomial<T> {
    pub fn zero() -> Self {
        LaurentPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0)
    }

    pub fn monomial(coefficient: T, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Coefficients of `t^lo, t^(lo+1), …`.
    pub fn from_coefficients(lo: i64, coefficients: &[i64]) -> Self {
        Self::from_terms(coefficients.iter().enumerate().map(|(i, &c)| (lo + i as i64, T::lit(c))))
    }

    fn add_term(&mut self, exponent: i64, coefficient: T) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(T::zero);
        *entry = entry.clone() + coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: i64) -> T {
        self.terms.get(&exponent).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> T {
        self.terms.values().fold(T::zero(), |acc, c| acc + c.clone())
    }

    pub fn eval_at_minus_one(&self) -> T {
        self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            if e.rem_euclid(2) == 0 {
                acc + c.clone()
            } else {
                acc - c.clone()
            }
        })
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> T {
        self.terms.values().fold(T::zero(), |acc, c| acc + c.abs())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `p(t⁻¹)`.
    pub fn reflect(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    /// Shifts the support to be centred on 0.
    pub fn symmetrized(&self) -> Result<Self> {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Ok(self.clone());
        };
        if (lo + hi).rem_euclid(2) != 0 {
            return Err(Error::NotSymmetric(self.to_string()));
        }
        Ok(self.shift(-(lo + hi) / 2))
    }

    /// Symmetrized, with the overall sign chosen so that `p(1) = 1`.
    pub fn normalized(&self) -> Result<Self> {
        let p = self.symmetrized()?;
        let at_one = p.eval_at_one();
        if at_one.is_one() {
            Ok(p)
        } else if (-at_one).is_one() {
            Ok(-p)
        } else {
            Err(Error::NotSymmetric(format!("{p} does not evaluate to ±1 at t = 1")))
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> LaurentPolynomial<U> {
        LaurentPolynomial::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Parses the printed format, e.g. `4t^{-2} -12t^{-1} + 17-12t^{1} + 4t^2`.
    /// Accepts `+ -` runs, missing or explicit unit coefficients (`t^2`,
    /// `-1t^4`), bare `t`, and exponents with or without braces.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::parse("polynomial", text, reason);
        let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let mut p = Self::zero();
        let mut i = 0;
        while i < s.len() {
            let mut negative = false;
            let mut saw_sign = false;
            while i < s.len() && (s[i] == '+' || s[i] == '-' || s[i] == '−') {
                negative ^= s[i] != '+';
                saw_sign = true;
                i += 1;
            }
            if i > 0 && !saw_sign {
                return Err(bad("missing operator between terms"));
            }
            let start = i;
            while i < s.len() && s[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = s[start..i].iter().collect();
            let mut exponent = 0i64;
            let has_t = i < s.len() && s[i] == 't';
            if has_t {
                i += 1;
                exponent = 1;
                if i < s.len() && s[i] == '^' {
                    i += 1;
                    let braced = i < s.len() && s[i] == '{';
                    if braced {
                        i += 1;
                    }
                    let e_start = i;
                    if i < s.len() && (s[i] == '-' || s[i] == '−' || s[i] == '+') {
                        i += 1;
                    }
                    while i < s.len() && s[i].is_ascii_digit() {
                        i += 1;
                    }
                    let e_text: String = s[e_start..i].iter().map(|&c| if c == '−' { '-' } else { c }).collect();
                    exponent = e_text.parse().map_err(|_| bad("malformed exponent"))?;
                    if braced {
                        if i >= s.len() || s[i] != '}' {
                            return Err(bad("unclosed exponent brace"));
                        }
                        i += 1;
                    }
                }
            } else if digits.is_empty() {
                return Err(bad("expected a coefficient or t"));
            }
            let magnitude = if digits.is_empty() {
                T::one()
            } else {
                T::parse_decimal(&digits).ok_or_else(|| bad("coefficient out of range"))?
            };
            p.add_term(exponent, if negative { -magnitude } else { magnitude });
        }
        Ok(p)
    }
}

impl<T: Scalar> FromStr for LaurentPolynomial<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl<T: Scalar> fmt::Display for LaurentPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *e == 0 {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}")?;
                }
                write!(f, "t^{{{e}}}")?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> Neg for LaurentPolynomial<T> {
    type Output = Self;

    fn neg(self) -> Self {
        LaurentPolynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<T: Scalar> Add<&LaurentPolynomial<T>> for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn add(self, rhs: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub<&LaurentPolynomial<T>> for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn sub(self, rhs: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul<&LaurentPolynomial<T>> for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn mul(self, rhs: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for LaurentPolynomial<T> {
            type Output = LaurentPolynomial<T>;

            fn $m(self, rhs: LaurentPolynomial<T>) -> LaurentPolynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
