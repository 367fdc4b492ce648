//! Alexander polynomial, signature and knot Floer ranks of two-bridge knots,
//! plus the Seifert-genus bound read off a pattern.
//!
//! Two unrelated derivations are provided. The fast path sums the sign
//! sequence `εᵢ = (−1)^⌊iq/D⌋` (with `q` odd). The oracle builds the
//! tridiagonal Seifert matrix of the plumbing surface from an even
//! continued fraction of `D/q` and takes determinants.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::poly::LaurentPolynomial;
use crate::rational::Fraction;
use crate::scalar::Scalar;

/// The sign-sequence walk is linear in `D`; refuse anything longer.
pub const MAX_SEQUENCE_DETERMINANT: u64 = 1 << 28;

fn require_knot<T: Scalar>(f: &Fraction<T>) -> Result<()> {
    if f.is_knot() {
        Ok(())
    } else {
        Err(Error::NotAKnot(f.to_string()))
    }
}

/// `εᵢ` for `i = 1..D`, using an odd representative of `q` modulo `D`.
fn sign_sequence<T: Scalar>(f: &Fraction<T>) -> Result<Vec<i8>> {
    require_knot(f)?;
    let too_big = || Error::BoundExceeded {
        det: f.denominator().to_string(),
        bound: MAX_SEQUENCE_DETERMINANT.to_string(),
    };
    let d = f
        .denominator()
        .to_u64()
        .filter(|&n| n <= MAX_SEQUENCE_DETERMINANT)
        .ok_or_else(too_big)?;
    let q = f.numerator().to_u64().ok_or_else(too_big)?;
    // q + D is odd when q is even, and ⌊i(q+D)/D⌋ has the parity of ⌊iq/D⌋ + i,
    // the same as for q − D. Track iq' mod D and the parity of the quotient.
    let step = if q % 2 == 1 { q } else { q + d };
    let (carry, r_step) = (step / d, step % d);
    let mut rem = 0u64;
    let mut odd = false;
    let mut out = Vec::with_capacity(d as usize);
    for _ in 1..d {
        rem += r_step;
        let mut k = carry;
        if rem >= d {
            rem -= d;
            k += 1;
        }
        odd ^= k % 2 == 1;
        out.push(if odd { -1 } else { 1 });
    }
    Ok(out)
}

/// Symmetrized Alexander polynomial with `Δ(1) = 1`.
pub fn alexander_two_bridge<T: Scalar>(f: &Fraction<T>) -> Result<LaurentPolynomial<T>> {
    let eps = sign_sequence(f)?;
    // Partial sums stay within ±len, so a dense offset array holds every
    // coefficient, each bounded by len.
    let len = eps.len() as i64;
    let mut dense = vec![0i64; 2 * eps.len() + 1];
    dense[len as usize] = 1;
    let mut s = 0i64;
    for (k, e) in eps.iter().enumerate() {
        s += i64::from(*e);
        dense[(s + len) as usize] += if (k + 1) % 2 == 0 { 1 } else { -1 };
    }
    let terms = dense
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, &c)| (i as i64 - len, T::lit(c)));
    LaurentPolynomial::from_terms(terms).normalized()
}

/// `σ = −Σ εᵢ`. The trefoil `1/3` gets −2.
pub fn signature_two_bridge<T: Scalar>(f: &Fraction<T>) -> Result<i64> {
    let eps = sign_sequence(f)?;
    Ok(-eps.iter().map(|&e| i64::from(e)).sum::<i64>())
}

/// Even continued fraction `D/q' = 2k₁ − 1/(2k₂ − 1/(…))` for the even
/// representative `q'` of `q` modulo `D`, each step rounding to the nearest
/// even multiple so the remainder shrinks.
pub fn even_continued_fraction<T: Scalar>(f: &Fraction<T>) -> Result<Vec<T>> {
    require_knot(f)?;
    let d = f.denominator().clone();
    let q = if f.numerator().is_even() {
        f.numerator().clone()
    } else {
        f.numerator().clone() - d.clone()
    };
    let (mut a, mut b) = (d, q);
    let mut out = Vec::new();
    let two = T::two();
    while !b.is_zero() {
        // nearest integer to a / 2b
        let denom = two.clone() * b.clone();
        let k = (two.clone() * a.clone() + denom.clone()).div_floor(&(two.clone() * denom.clone()));
        let r = a - k.clone() * denom;
        out.push(two.clone() * k);
        a = b;
        b = r;
    }
    Ok(out)
}

/// Seifert matrix of the plumbing of twisted bands: `V[k][k] = ±bₖ/2`
/// with alternating sign, `V[k][k+1] = 1`, zero elsewhere.
pub fn seifert_matrix<T: Scalar>(f: &Fraction<T>) -> Result<Vec<Vec<T>>> {
    let even = even_continued_fraction(f)?;
    let n = even.len();
    let mut v = vec![vec![T::zero(); n]; n];
    for (k, b) in even.iter().enumerate() {
        let half = b.clone() / T::two();
        v[k][k] = if k % 2 == 0 { half } else { -half };
        if k + 1 < n {
            v[k][k + 1] = T::one();
        }
    }
    Ok(v)
}

fn check_bound<T: Scalar>(f: &Fraction<T>, max_det: &T) -> Result<()> {
    if f.denominator() > max_det {
        return Err(Error::BoundExceeded {
            det: f.denominator().to_string(),
            bound: max_det.to_string(),
        });
    }
    Ok(())
}

/// Determinant of a tridiagonal matrix of polynomials by its three-term
/// recurrence. Errors if an entry off the three diagonals is nonzero.
fn tridiagonal_det<T: Scalar>(m: &[Vec<LaurentPolynomial<T>>]) -> Result<LaurentPolynomial<T>> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i.abs_diff(j) > 1 && !x.is_zero() {
                return Err(Error::Inapplicable("Seifert matrix is not tridiagonal".into()));
            }
        }
    }
    let mut prev = LaurentPolynomial::one();
    let mut cur = LaurentPolynomial::one();
    for k in 0..n {
        let next = if k == 0 {
            m[0][0].clone()
        } else {
            let off = &m[k][k - 1] * &m[k - 1][k];
            &(&m[k][k] * &cur) - &(&off * &prev)
        };
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `det(V − tVᵀ)` of the plumbing Seifert matrix, normalized.
pub fn alexander_oracle<T: Scalar>(f: &Fraction<T>, max_det: &T) -> Result<LaurentPolynomial<T>> {
    check_bound(f, max_det)?;
    let v = seifert_matrix(f)?;
    let n = v.len();
    let t = LaurentPolynomial::monomial(T::one(), 1);
    let m: Vec<Vec<LaurentPolynomial<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = LaurentPolynomial::monomial(v[i][j].clone(), 0);
                    let b = LaurentPolynomial::monomial(v[j][i].clone(), 0);
                    &a - &(&t * &b)
                })
                .collect()
        })
        .collect();
    // V − Vᵀ must be unimodular for a knot's Seifert form.
    let at_one = tridiagonal_det(&m)?.eval_at_one();
    if !at_one.abs().is_one() {
        return Err(Error::Inapplicable(format!("det(V - V^T) = {at_one}")));
    }
    tridiagonal_det(&m)?.normalized()
}

/// Signature of `V + Vᵀ`, via signs of its leading principal minors.
pub fn signature_oracle<T: Scalar>(f: &Fraction<T>, max_det: &T) -> Result<i64> {
    check_bound(f, max_det)?;
    let v = seifert_matrix(f)?;
    let n = v.len();
    // Leading minors of the symmetric tridiagonal matrix with diagonal 2V[k][k]
    // and off-diagonal 1. A zero minor is flanked by minors of opposite sign, so
    // skipping it counts the sign changes correctly.
    let mut minors = vec![T::one()];
    let mut prev = T::one();
    let mut cur = T::one();
    for (k, row) in v.iter().enumerate() {
        let diag = T::two() * row[k].clone();
        let next = if k == 0 {
            diag
        } else {
            diag * cur.clone() - prev.clone()
        };
        prev = cur;
        cur = next.clone();
        minors.push(next);
    }
    if cur.is_zero() {
        return Err(Error::Inapplicable("degenerate symmetrized Seifert form".into()));
    }
    let nonzero: Vec<&T> = minors.iter().filter(|m| !m.is_zero()).collect();
    let changes = nonzero
        .windows(2)
        .filter(|w| w[0].is_negative() != w[1].is_negative())
        .count() as i64;
    Ok(n as i64 - 2 * changes)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HfkEntry<T = BigInt> {
    pub rank: T,
    pub maslov: i64,
}

/// Knot Floer homology of an alternating knot: rank `|aᵢ|` supported in
/// bigrading `(i, i + σ/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HfkTable<T = BigInt> {
    pub signature: i64,
    pub entries: BTreeMap<i64, HfkEntry<T>>,
}

impl<T: Scalar> HfkTable<T> {
    /// Total rank in Alexander grading `i`.
    pub fn rank_at(&self, alexander: i64) -> T {
        self.entries
            .get(&alexander)
            .map(|e| e.rank.clone())
            .unwrap_or_else(T::zero)
    }

    /// Rank at the bigrading `(alexander, maslov)`.
    pub fn rank_at_bigrading(&self, alexander: i64, maslov: i64) -> T {
        match self.entries.get(&alexander) {
            Some(e) if e.maslov == maslov => e.rank.clone(),
            _ => T::zero(),
        }
    }

    pub fn total_rank(&self) -> T {
        self.entries.values().fold(T::zero(), |acc, e| acc + e.rank.clone())
    }
}

pub fn hfk_alternating<T: Scalar>(delta: &LaurentPolynomial<T>, signature: i64) -> Result<HfkTable<T>> {
    if signature % 2 != 0 {
        return Err(Error::OddSignature(signature.to_string()));
    }
    let entries = delta
        .terms()
        .map(|(i, a)| {
            (
                i,
                HfkEntry {
                    rank: a.abs(),
                    maslov: i + signature / 2,
                },
            )
        })
        .collect();
    Ok(HfkTable { signature, entries })
}

/// Seifert's algorithm on the pattern's diagram: `χ = 2 − Σcᵢ`, so the
/// genus is `(Σcᵢ − 1)/2` when that is integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertGenus<T = BigInt> {
    pub euler_characteristic: T,
    pub genus: Option<T>,
}

pub fn genus_bound<T: Scalar>(p: &Pattern<T>) -> SeifertGenus<T> {
    let sum_c = p.sum_c();
    let euler_characteristic = T::two() - sum_c.clone();
    let genus = if sum_c.is_odd() {
        Some((sum_c - T::one()) / T::two())
    } else {
        None
    };
    SeifertGenus {
        euler_characteristic,
        genus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::cf_value;
    use crate::ContinuedFraction;
    use num_integer::Integer;

    type P = LaurentPolynomial<i64>;

    fn fr(q: i64, d: i64) -> Fraction<i64> {
        Fraction::new(q, d).unwrap()
    }

    fn cf(terms: &[i64]) -> Fraction<i64> {
        cf_value(&ContinuedFraction::from_slice(terms).unwrap()).unwrap()
    }

    const BIG: i64 = 1_000_000;

    #[test]
    fn small_knots() {
        let trefoil = P::from_coefficients(-1, &[1, -1, 1]);
        assert_eq!(alexander_two_bridge(&fr(1, 3)).unwrap(), trefoil);
        assert_eq!(alexander_oracle(&fr(1, 3), &BIG).unwrap(), trefoil);
        let eight = P::from_coefficients(-1, &[-1, 3, -1]);
        assert_eq!(alexander_two_bridge(&fr(2, 5)).unwrap(), eight);
        assert_eq!(alexander_oracle(&fr(2, 5), &BIG).unwrap(), eight);

        assert_eq!(signature_two_bridge(&fr(1, 3)).unwrap(), -2);
        assert_eq!(signature_two_bridge(&fr(2, 3)).unwrap(), 2);
        assert_eq!(signature_two_bridge(&fr(2, 5)).unwrap(), 0);
        assert_eq!(signature_two_bridge(&fr(1, 5)).unwrap(), -4);
        assert_eq!(signature_oracle(&fr(1, 5), &BIG).unwrap(), -4);
    }

    #[test]
    fn companion_polynomials() {
        let k = cf(&[1, 1, 7, 1, 2]);
        assert_eq!(k, fr(26, 49));
        assert_eq!(alexander_two_bridge(&k).unwrap(), P::from_coefficients(-2, &[4, -12, 17, -12, 4]));
        let k = cf(&[1, 1, 7, 3, 2]);
        assert_eq!(k, fr(58, 109));
        assert_eq!(alexander_two_bridge(&k).unwrap(), P::from_coefficients(-2, &[8, -27, 39, -27, 8]));
        let k = cf(&[1, 2, 1, 3, 1]);
        assert_eq!(k, fr(14, 19));
        let p = alexander_oracle(&k, &BIG).unwrap();
        assert_eq!(p, P::from_coefficients(-2, &[-2, 5, -5, 5, -2]));
        assert_eq!(p.eval_at_minus_one().abs(), 19);
    }

    #[test]
    fn even_expansion() {
        // 5/2 = 2 - 1/2
        assert_eq!(even_continued_fraction(&fr(2, 5)).unwrap(), vec![2, 2]);
        assert!(even_continued_fraction(&fr(1, 4)).is_err());
        assert_eq!(seifert_matrix(&fr(1, 3)).unwrap(), vec![vec![-1, 1], vec![0, -1]]);
    }

    #[test]
    fn links_and_bounds_rejected() {
        assert!(matches!(alexander_two_bridge(&fr(1, 2)), Err(Error::NotAKnot(_))));
        assert!(matches!(signature_two_bridge(&fr(3, 8)), Err(Error::NotAKnot(_))));
        assert!(matches!(alexander_oracle(&fr(1, 101), &99), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn hfk_tables() {
        let t = hfk_alternating(&P::one(), 0).unwrap();
        assert_eq!(t.rank_at_bigrading(0, 0), 1);
        assert_eq!(t.total_rank(), 1);
        assert!(matches!(hfk_alternating(&P::one(), 1), Err(Error::OddSignature(_))));

        let k = cf(&[1, 2, 1, 3, 1]);
        let t = hfk_alternating(&alexander_two_bridge(&k).unwrap(), signature_two_bridge(&k).unwrap()).unwrap();
        assert_eq!(t.rank_at(-2), 2);
        assert_eq!(t.total_rank(), 19);

        let k = cf(&[1, 1, 5, 1, 2]);
        let t = hfk_alternating(&alexander_two_bridge(&k).unwrap(), signature_two_bridge(&k).unwrap()).unwrap();
        assert_eq!(t.rank_at(2), 3);
        let e = &t.entries[&2];
        assert_eq!(e.maslov, 2 + t.signature / 2);
    }

    #[test]
    fn genus_examples() {
        let g = genus_bound(&Pattern::<i64>::from_pairs(&[(7, 1), (2, 1)]).unwrap());
        assert_eq!(g.genus, Some(4));
        assert_eq!(g.euler_characteristic, -7);
        let g = genus_bound(&Pattern::<i64>::from_pairs(&[(1, 1)]).unwrap());
        assert_eq!(g.genus, Some(0));
        let g = genus_bound(&Pattern::<i64>::from_pairs(&[(2, 1)]).unwrap());
        assert_eq!(g.genus, None);
    }

    #[test]
    fn methods_agree_up_to_49() {
        for d in (3..=49).step_by(2) {
            for q in 1..d {
                if q.gcd(&d) != 1 {
                    continue;
                }
                let f = fr(q, d);
                let a = alexander_two_bridge(&f).unwrap();
                assert_eq!(a, alexander_oracle(&f, &BIG).unwrap(), "{f}");
                assert_eq!(signature_two_bridge(&f).unwrap(), signature_oracle(&f, &BIG).unwrap(), "{f}");
                assert_eq!(a.eval_at_minus_one().abs(), d);
                assert!(a.is_palindromic());
            }
        }
    }

    #[test]
    fn big_scalar_agrees() {
        let f = Fraction::<BigInt>::new(BigInt::from(14), BigInt::from(19)).unwrap();
        let p = alexander_two_bridge(&f).unwrap();
        assert_eq!(p.coefficient(-2), BigInt::from(-2));
    }
}
