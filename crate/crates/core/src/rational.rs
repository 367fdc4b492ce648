//! Exact fractions, continued fractions and the two-bridge classification.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A reduced fraction `q/D` with `0 < q < D`, naming the two-bridge knot or
/// link `K(q/D)`. The denominator is the determinant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction<T = BigInt> {
    numerator: T,
    denominator: T,
}

impl<T: Scalar> Fraction<T> {
    /// Builds `numerator/denominator` in lowest terms. The value must lie
    /// strictly between 0 and 1.
    pub fn new(numerator: T, denominator: T) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (mut n, mut d) = (numerator, denominator);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        let (n, d) = (n / g.clone(), d / g);
        if !n.is_positive() || n >= d {
            return Err(Error::FractionOutOfRange(format!("{n}/{d}")));
        }
        Ok(Fraction {
            numerator: n,
            denominator: d,
        })
    }

    /// Parses `"p/q"`, which must already be in lowest terms.
    pub fn parse(input: &str) -> Result<Self> {
        let (p, q) = input
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::parse("fraction", input, "expected p/q"))?;
        let p = T::parse_decimal(p).ok_or_else(|| Error::parse("fraction", input, "bad numerator"))?;
        let q = T::parse_decimal(q).ok_or_else(|| Error::parse("fraction", input, "bad denominator"))?;
        if !p.gcd(&q).is_one() {
            return Err(Error::parse("fraction", input, "not in lowest terms"));
        }
        Fraction::new(p, q)
    }

    pub fn numerator(&self) -> &T {
        &self.numerator
    }

    pub fn denominator(&self) -> &T {
        &self.denominator
    }

    /// The knot determinant, which is the denominator.
    pub fn determinant(&self) -> &T {
        &self.denominator
    }

    /// Two-bridge knots have odd determinant; even determinant means a
    /// two-component link.
    pub fn is_knot(&self) -> bool {
        self.denominator.is_odd()
    }

    /// True for the `(2, n)` torus knots, i.e. `q ≡ ±1 (mod D)`.
    pub fn is_torus_two_bridge(&self) -> bool {
        let d = &self.denominator;
        self.numerator.is_one() || (d.clone() - self.numerator.clone()).is_one()
    }

    /// `(D - q)/D`, the fraction of the mirror image.
    pub fn mirror(&self) -> Self {
        Fraction {
            numerator: self.denominator.clone() - self.numerator.clone(),
            denominator: self.denominator.clone(),
        }
    }

    /// `q⁻¹ mod D` over the same determinant; the same unoriented knot read
    /// from the other end.
    pub fn inverse(&self) -> Self {
        Fraction {
            numerator: mod_inverse(&self.numerator, &self.denominator),
            denominator: self.denominator.clone(),
        }
    }

    /// Smallest numerator among `±q^{±1} mod D`. Two fractions share a key
    /// iff [`equivalence`] says `Same` or `Mirror`.
    pub fn class_key(&self) -> Self {
        let candidates = [self.clone(), self.mirror(), self.inverse(), self.inverse().mirror()];
        candidates
            .into_iter()
            .min_by(|a, b| a.numerator.cmp(&b.numerator))
            .expect("four candidates")
    }
}

impl<T: Scalar> PartialOrd for Fraction<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by determinant first, then numerator.
impl<T: Scalar> Ord for Fraction<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.denominator
            .cmp(&other.denominator)
            .then_with(|| self.numerator.cmp(&other.numerator))
    }
}

impl<T: fmt::Display> fmt::Display for Fraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

fn mod_inverse<T: Scalar>(q: &T, d: &T) -> T {
    let e = q.extended_gcd(d);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(d)
}

/// A regular continued fraction `[a₁, …, aₙ]` with every term `≥ 1`, read as
/// `1/(a₁ + 1/(a₂ + ⋯ + 1/aₙ))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction<T = BigInt> {
    terms: Vec<T>,
}

impl<T: Scalar> ContinuedFraction<T> {
    pub fn new(terms: Vec<T>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyContinuedFraction);
        }
        if let Some(bad) = terms.iter().find(|t| !t.is_positive()) {
            return Err(Error::NonPositiveTerm(bad.to_string()));
        }
        Ok(ContinuedFraction { terms })
    }

    pub fn from_slice(terms: &[i64]) -> Result<Self> {
        ContinuedFraction::new(terms.iter().map(|&t| T::lit(t)).collect())
    }

    /// Parses `"[a1 a2 ... an]"` or `"a1,a2,...,an"`. Brackets are optional
    /// and commas and whitespace are interchangeable separators.
    pub fn parse(input: &str) -> Result<Self> {
        let s = input.trim();
        let s = match (s.strip_prefix('['), s.ends_with(']')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => s,
            _ => return Err(Error::parse("continued fraction", input, "unbalanced brackets")),
        };
        let terms = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                T::parse_decimal(t)
                    .ok_or_else(|| Error::parse("continued fraction", input, format!("bad term {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ContinuedFraction::new(terms)
    }

    pub fn terms(&self) -> &[T] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_odd_length(&self) -> bool {
        self.terms.len() % 2 == 1
    }

    /// `m` for an odd-length expansion `[a₁, …, a_{2m+1}]`.
    pub fn half_length(&self) -> Option<usize> {
        self.is_odd_length().then(|| (self.terms.len() - 1) / 2)
    }

    pub fn first(&self) -> &T {
        &self.terms[0]
    }

    /// Evaluates the nesting in lowest terms.
    pub fn value(&self) -> Result<Fraction<T>> {
        cf_value(self)
    }

    /// The odd-length expansion of the same value. A trailing `1` is merged
    /// into its neighbour; otherwise the last term is split as `aₙ = (aₙ-1) + 1/1`.
    pub fn to_odd_length(&self) -> Self {
        if self.is_odd_length() {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        let last = terms.pop().expect("nonempty");
        if last.is_one() {
            let prev = terms.last_mut().expect("even length has at least two terms");
            *prev = prev.clone() + T::one();
        } else {
            terms.push(last - T::one());
            terms.push(T::one());
        }
        ContinuedFraction { terms }
    }

    /// Same expansion with the leading term replaced.
    pub fn with_first(&self, first: T) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms[0] = first;
        ContinuedFraction::new(terms)
    }
}

impl<T: fmt::Display> fmt::Display for ContinuedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// `1/(a₁ + 1/(a₂ + ⋯ + 1/aₙ))` in lowest terms. Fails only when the
/// value is not below 1, which happens for `[1]`.
pub fn cf_value<T: Scalar>(cf: &ContinuedFraction<T>) -> Result<Fraction<T>> {
    // Innermost first: x = num/den, then x <- 1/(a + x) = den/(a*den + num).
    // Continuants stay coprime, so no gcd is needed.
    let mut num = T::zero();
    let mut den = T::one();
    for a in cf.terms.iter().rev() {
        let next_den = a.clone() * den.clone() + num;
        num = den;
        den = next_den;
    }
    Fraction::new(num, den)
}

/// The unique odd-length expansion of `f`.
pub fn cf_expand_odd<T: Scalar>(f: &Fraction<T>) -> ContinuedFraction<T> {
    let mut terms = Vec::new();
    let (mut num, mut den) = (f.numerator.clone(), f.denominator.clone());
    while !num.is_zero() {
        let (a, r) = den.div_rem(&num);
        terms.push(a);
        den = num;
        num = r;
    }
    ContinuedFraction { terms }.to_odd_length()
}

/// How two fractions relate as unoriented two-bridge knots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equivalence {
    /// `q₂ ≡ q₁^{±1} (mod D)`.
    Same,
    /// `q₂ ≡ -q₁^{±1} (mod D)`.
    Mirror,
    Distinct,
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equivalence::Same => "same",
            Equivalence::Mirror => "mirror",
            Equivalence::Distinct => "distinct",
        })
    }
}

/// Schubert's classification. For amphichiral knots both congruences hold;
/// `Same` wins.
pub fn equivalence<T: Scalar>(f1: &Fraction<T>, f2: &Fraction<T>) -> Equivalence {
    if f1.denominator != f2.denominator {
        return Equivalence::Distinct;
    }
    let d = &f1.denominator;
    let q1 = &f1.numerator;
    let q2 = &f2.numerator;
    let inv = mod_inverse(q1, d);
    if q2 == q1 || *q2 == inv {
        return Equivalence::Same;
    }
    let neg = |x: &T| (d.clone() - x.clone()).mod_floor(d);
    if *q2 == neg(q1) || *q2 == neg(&inv) {
        return Equivalence::Mirror;
    }
    Equivalence::Distinct
}

pub fn is_knot<T: Scalar>(f: &Fraction<T>) -> bool {
    f.is_knot()
}

pub fn is_torus_two_bridge<T: Scalar>(f: &Fraction<T>) -> bool {
    f.is_torus_two_bridge()
}
