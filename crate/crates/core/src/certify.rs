//! The decision pipeline: from a fraction to a certificate carrying every
//! intermediate invariant and the lower bound on Legendrian realizations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};
use crate::invariants::{alexander_two_bridge, genus_bound, SeifertGenus};
use crate::pattern::{component_count, winding_number, Pattern};
use crate::perm::Perm3;
use crate::poly::LaurentPolynomial;
use crate::rational::{cf_expand_odd, cf_value, ContinuedFraction, Fraction};
use crate::scalar::Scalar;

/// Families longer than this are summarized by their size only.
pub const MAX_LISTED_FAMILY: usize = 256;

/// Legendrian unknot `U(a, b)` with `k = 2a+1` and `l = 2b+1` zigzags.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnknotCompanion<T = BigInt> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> UnknotCompanion<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if a.is_negative() || b.is_negative() {
            return Err(Error::Inapplicable(format!("U({a}, {b}) needs a, b >= 0")));
        }
        Ok(UnknotCompanion { a, b })
    }

    /// From odd positive `k` and `l`.
    pub fn from_kl(k: T, l: T) -> Result<Self> {
        if !k.is_positive() || !l.is_positive() || k.is_even() || l.is_even() {
            return Err(Error::Inapplicable(format!("k = {k}, l = {l} must be odd and positive")));
        }
        Self::new((k - T::one()) / T::two(), (l - T::one()) / T::two())
    }

    pub fn k(&self) -> T {
        T::two() * self.a.clone() + T::one()
    }

    pub fn l(&self) -> T {
        T::two() * self.b.clone() + T::one()
    }

    pub fn tb(&self) -> T {
        -(self.k() + self.l()) / T::two()
    }

    pub fn rot(&self) -> T {
        self.k() - self.l()
    }
}

/// `tb = w²·tb(U) + tb(L̃)` and `rot = w·rot(U) + rot(L̃)`.
pub fn satellite_invariants<T: Scalar>(companion: &UnknotCompanion<T>, winding: u8, tb_pattern: &T, rot_pattern: &T) -> (T, T) {
    let w = T::lit(i64::from(winding));
    (
        w.clone() * w.clone() * companion.tb() + tb_pattern.clone(),
        w * companion.rot() + rot_pattern.clone(),
    )
}

/// The pairs `(k, l)` of odd positive integers with `k + l = a₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family<T = BigInt> {
    pub a1: T,
    pub size: T,
}

impl<T: Scalar> Family<T> {
    pub fn new(a1: T) -> Result<Self> {
        if !a1.is_positive() || a1.is_odd() {
            return Err(Error::Inapplicable(format!("a1 = {a1} must be even and positive")));
        }
        let size = a1.clone() / T::two();
        Ok(Family { a1, size })
    }

    /// All pairs, `k` increasing. Callers should check `size` first.
    pub fn pairs(&self) -> impl Iterator<Item = (T, T)> + '_ {
        let mut k = T::one();
        std::iter::from_fn(move || {
            if k >= self.a1 {
                return None;
            }
            let pair = (k.clone(), self.a1.clone() - k.clone());
            k = k.clone() + T::two();
            Some(pair)
        })
    }

    pub fn companions(&self) -> impl Iterator<Item = UnknotCompanion<T>> + '_ {
        self.pairs()
            .map(|(k, l)| UnknotCompanion::from_kl(k, l).expect("pairs are odd and positive"))
    }
}

/// `a₂` odd, `a₁` and every later even-indexed term even, and the odd-indexed
/// terms after `a₁` summing to an odd number.
pub fn theorem1_applicable<T: Scalar>(cf: &ContinuedFraction<T>) -> bool {
    let Some(m) = cf.half_length() else {
        return false;
    };
    if m == 0 {
        return false;
    }
    let a = cf.terms();
    let a2_odd = a[1].is_odd();
    let evens = a[0].is_even() && (2..=m).all(|i| a[2 * i - 1].is_even());
    let sum = (1..=m).fold(T::zero(), |acc, i| acc + a[2 * i].clone());
    a2_odd && evens && sum.is_odd()
}

/// Replace `a₁` by 1 and evaluate.
pub fn k0_of<T: Scalar>(cf: &ContinuedFraction<T>) -> Result<Fraction<T>> {
    match cf.half_length() {
        Some(m) if m >= 1 => cf_value(&cf.with_first(T::one())?),
        _ => Err(Error::NoPattern(cf.to_string())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InapplicableReason {
    Link,
    TorusKnot,
    NoPattern,
    OddLeadingTerm,
    WindingTwo,
    TwoComponents,
    NonIntegralGrading,
    TooLarge,
}

impl InapplicableReason {
    pub fn as_str(self) -> &'static str {
        match self {
            InapplicableReason::Link => "link",
            InapplicableReason::TorusKnot => "torus knot",
            InapplicableReason::NoPattern => "no pattern",
            InapplicableReason::OddLeadingTerm => "odd a1",
            InapplicableReason::WindingTwo => "winding number 2",
            InapplicableReason::TwoComponents => "two-component pattern",
            InapplicableReason::NonIntegralGrading => "non-integral grading",
            InapplicableReason::TooLarge => "companion too large",
        }
    }
}

impl fmt::Display for InapplicableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificatePath {
    /// The parity family: the rank at `Ã` vanishes by the genus argument.
    Theorem1,
    /// Outside the family, but the same genus argument applies.
    GenusBound,
    /// The rank `r` is read off `Δ_{K₀}`.
    RankBound,
    Inapplicable(InapplicableReason),
}

impl CertificatePath {
    pub fn is_applicable(self) -> bool {
        !matches!(self, CertificatePath::Inapplicable(_))
    }
}

impl fmt::Display for CertificatePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificatePath::Theorem1 => f.write_str("Theorem1"),
            CertificatePath::GenusBound => f.write_str("GenusBound"),
            CertificatePath::RankBound => f.write_str("RankBound"),
            CertificatePath::Inapplicable(r) => write!(f, "Inapplicable({r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    NonSimple,
    /// `N = 1`: nothing is certified, and nothing about simplicity follows.
    Inconclusive,
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NonSimple => "non-simple",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything computed for one knot. Fields after the failing check of an
/// inapplicable certificate stay `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<T = BigInt> {
    pub input: Fraction<T>,
    pub cf: Option<ContinuedFraction<T>>,
    pub pattern: Option<Pattern<T>>,
    pub total_perm: Option<Perm3>,
    pub components: Option<u8>,
    pub winding: Option<u8>,
    pub writhe: Option<T>,
    /// `(up, down)`.
    pub cusps: Option<(T, T)>,
    pub tb: Option<T>,
    pub rot: Option<T>,
    pub sl: Option<T>,
    pub alexander_grading: Option<T>,
    pub genus: Option<SeifertGenus<T>>,
    pub k0: Option<Fraction<T>>,
    pub delta_k0: Option<LaurentPolynomial<T>>,
    /// `|coefficient of Δ_{K₀} at Ã|`, always computed when possible.
    pub model_rank: Option<T>,
    /// The rank used in the bound.
    pub rank_r: Option<T>,
    pub bound_n: Option<T>,
    pub path: CertificatePath,
    pub verdict: Verdict,
    pub family: Option<Family<T>>,
    pub notes: Vec<String>,
}

impl<T: Scalar> Certificate<T> {
    fn empty(input: Fraction<T>) -> Self {
        Certificate {
            input,
            cf: None,
            pattern: None,
            total_perm: None,
            components: None,
            winding: None,
            writhe: None,
            cusps: None,
            tb: None,
            rot: None,
            sl: None,
            alexander_grading: None,
            genus: None,
            k0: None,
            delta_k0: None,
            model_rank: None,
            rank_r: None,
            bound_n: None,
            path: CertificatePath::Inapplicable(InapplicableReason::Link),
            verdict: Verdict::Inapplicable,
            family: None,
            notes: Vec::new(),
        }
    }

    fn inapplicable(mut self, reason: InapplicableReason) -> Self {
        self.path = CertificatePath::Inapplicable(reason);
        self.verdict = Verdict::Inapplicable;
        self
    }

    pub fn is_applicable(&self) -> bool {
        self.path.is_applicable()
    }

    /// Stable JSON form. Integers are exact JSON numbers of any size, the
    /// polynomial uses the printed text format, and absent values are `null`.
    pub fn to_json(&self) -> Value {
        let int = |x: &T| Value::Number(Number::from_str(&x.to_string()).expect("integer literal"));
        let opt_int = |x: &Option<T>| x.as_ref().map_or(Value::Null, int);
        let small = |x: Option<u8>| x.map_or(Value::Null, Value::from);
        let mut m = Map::new();
        m.insert("input".into(), Value::String(self.input.to_string()));
        m.insert(
            "cf".into(),
            self.cf
                .as_ref()
                .map_or(Value::Null, |cf| Value::Array(cf.terms().iter().map(int).collect())),
        );
        m.insert(
            "pattern".into(),
            self.pattern.as_ref().map_or(Value::Null, |p| {
                Value::Array(
                    p.terms()
                        .iter()
                        .map(|t| {
                            let mut o = Map::new();
                            o.insert("c".into(), int(t.c()));
                            o.insert("d".into(), int(t.d()));
                            Value::Object(o)
                        })
                        .collect(),
                )
            }),
        );
        m.insert(
            "total_perm".into(),
            self.total_perm.map_or(Value::Null, |p| Value::String(p.to_string())),
        );
        m.insert("components".into(), small(self.components));
        m.insert("winding".into(), small(self.winding));
        m.insert("writhe".into(), opt_int(&self.writhe));
        m.insert(
            "cusps".into(),
            self.cusps.as_ref().map_or(Value::Null, |(u, d)| {
                let mut o = Map::new();
                o.insert("up".into(), int(u));
                o.insert("down".into(), int(d));
                Value::Object(o)
            }),
        );
        m.insert("tb".into(), opt_int(&self.tb));
        m.insert("rot".into(), opt_int(&self.rot));
        m.insert("sl".into(), opt_int(&self.sl));
        m.insert("alexander_grading".into(), opt_int(&self.alexander_grading));
        m.insert(
            "genus".into(),
            self.genus
                .as_ref()
                .map_or(Value::Null, |g| g.genus.as_ref().map_or(Value::Null, int)),
        );
        m.insert(
            "k0".into(),
            self.k0.as_ref().map_or(Value::Null, |k| Value::String(k.to_string())),
        );
        m.insert(
            "delta_k0".into(),
            self.delta_k0
                .as_ref()
                .map_or(Value::Null, |p| Value::String(p.to_string())),
        );
        m.insert("model_rank".into(), opt_int(&self.model_rank));
        m.insert("rank_r".into(), opt_int(&self.rank_r));
        m.insert("bound_n".into(), opt_int(&self.bound_n));
        m.insert("path".into(), Value::String(self.path.to_string()));
        m.insert("verdict".into(), Value::String(self.verdict.to_string()));
        m.insert(
            "family".into(),
            self.family.as_ref().map_or(Value::Null, |f| {
                let mut o = Map::new();
                o.insert("size".into(), int(&f.size));
                let listed = f.size.to_usize().is_some_and(|n| n <= MAX_LISTED_FAMILY);
                o.insert(
                    "pairs".into(),
                    if listed {
                        Value::Array(
                            f.pairs()
                                .map(|(k, l)| Value::Array(vec![int(&k), int(&l)]))
                                .collect(),
                        )
                    } else {
                        Value::Null
                    },
                );
                Value::Object(o)
            }),
        );
        m.insert(
            "notes".into(),
            Value::Array(self.notes.iter().cloned().map(Value::String).collect()),
        );
        Value::Object(m)
    }
}

/// `⌈a / 2^k⌉` by repeated ceiling halving, stopping once it reaches 1.
fn ceil_div_pow2<T: Scalar>(a: &T, k: &T) -> T {
    let mut v = a.clone();
    let mut left = k.clone();
    while left.is_positive() && v > T::one() {
        v = (v + T::one()) / T::two();
        left = left - T::one();
    }
    v
}

/// `N = ⌈a₁ / (4·2^r)⌉`.
pub fn realization_bound<T: Scalar>(a1: &T, rank: &T) -> T {
    ceil_div_pow2(a1, &(rank.clone() + T::two()))
}

pub fn certify<T: Scalar>(f: &Fraction<T>) -> Certificate<T> {
    use InapplicableReason as R;

    let mut cert = Certificate::empty(f.clone());
    if !f.is_knot() {
        return cert.inapplicable(R::Link);
    }
    if f.is_torus_two_bridge() {
        return cert.inapplicable(R::TorusKnot);
    }
    let cf = cf_expand_odd(f);
    cert.cf = Some(cf.clone());
    let Ok(pattern) = Pattern::from_cf(&cf) else {
        return cert.inapplicable(R::NoPattern);
    };
    let a1 = cf.first().clone();
    if a1.is_odd() {
        cert.pattern = Some(pattern);
        return cert.inapplicable(R::OddLeadingTerm);
    }
    cert.family = Family::new(a1.clone()).ok();

    let total = pattern.total_permutation();
    cert.total_perm = Some(total);
    cert.components = Some(component_count(total));
    cert.winding = Some(winding_number(total));
    if component_count(total) != 1 {
        cert.pattern = Some(pattern);
        return cert.inapplicable(R::TwoComponents);
    }
    if winding_number(total) != 0 {
        cert.pattern = Some(pattern);
        return cert.inapplicable(R::WindingTwo);
    }

    let inv = pattern.invariants();
    // With w = 0 the companion drops out; U(0, 0) stands in for all of them.
    let unknot = UnknotCompanion::new(T::zero(), T::zero()).expect("nonnegative");
    let (tb, rot) = satellite_invariants(&unknot, 0, &inv.tb(), &inv.rot());
    let sl = tb.clone() - rot.clone();
    cert.writhe = Some(inv.writhe.clone());
    cert.cusps = Some((inv.up_cusps.clone(), inv.down_cusps.clone()));
    cert.tb = Some(tb);
    cert.rot = Some(rot);
    cert.sl = Some(sl.clone());
    let genus = genus_bound(&pattern);
    cert.genus = Some(genus.clone());
    cert.pattern = Some(pattern);
    if sl.is_even() {
        return cert.inapplicable(R::NonIntegralGrading);
    }
    let grading = (sl + T::one()) / T::two();
    cert.alexander_grading = Some(grading.clone());

    let k0 = k0_of(&cf).expect("pattern exists, so m >= 1");
    cert.k0 = Some(k0.clone());
    let delta = match alexander_two_bridge(&k0) {
        Ok(d) => d,
        Err(e) => {
            cert.notes.push(format!("Alexander polynomial of K0 not computed: {e}"));
            return cert.inapplicable(R::TooLarge);
        }
    };
    let model_rank = grading
        .to_i64()
        .map_or_else(T::zero, |g| delta.coefficient(g).abs());
    cert.delta_k0 = Some(delta);
    cert.model_rank = Some(model_rank.clone());

    let genus_below = genus.genus.as_ref().is_some_and(|g| *g < grading.abs());
    let (path, rank) = if theorem1_applicable(&cf) {
        if !model_rank.is_zero() {
            cert.notes.push(format!(
                "rank forced to 0 in the parity family; the companion model has rank {model_rank} at grading {grading}"
            ));
        }
        (CertificatePath::Theorem1, T::zero())
    } else if genus_below && model_rank.is_zero() {
        (CertificatePath::GenusBound, T::zero())
    } else {
        if genus_below {
            cert.notes.push(format!(
                "pattern genus is below |grading| but the companion model has rank {model_rank}; using the rank bound"
            ));
        }
        (CertificatePath::RankBound, model_rank)
    };
    let n = realization_bound(&a1, &rank);
    cert.verdict = if n >= T::two() {
        Verdict::NonSimple
    } else {
        cert.notes.push("N = 1 certifies nothing".into());
        Verdict::Inconclusive
    };
    cert.rank_r = Some(rank);
    cert.bound_n = Some(n);
    cert.path = path;
    cert
}

/// Transverse push-off: `sl = tb − rot` with the same bound.
pub fn transverse_view<T: Scalar>(cert: &Certificate<T>) -> Result<(T, T)> {
    match (&cert.sl, &cert.bound_n) {
        (Some(sl), Some(n)) if cert.is_applicable() => Ok((sl.clone(), n.clone())),
        _ => Err(Error::Inapplicable(cert.path.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fr(q: i64, d: i64) -> Fraction<i64> {
        Fraction::new(q, d).unwrap()
    }

    fn cf(t: &[i64]) -> ContinuedFraction<i64> {
        ContinuedFraction::from_slice(t).unwrap()
    }

    #[test]
    fn unknot_companions() {
        let u = UnknotCompanion::<i64>::from_kl(3, 1).unwrap();
        assert_eq!((u.a, u.b), (1, 0));
        assert_eq!(u.tb(), -2);
        assert_eq!(u.rot(), 2);
        assert!(UnknotCompanion::<i64>::from_kl(2, 1).is_err());
        let fam = Family::<i64>::new(6).unwrap();
        assert_eq!(fam.size, 3);
        assert_eq!(fam.pairs().collect::<Vec<_>>(), vec![(1, 5), (3, 3), (5, 1)]);
        assert!(fam.companions().all(|c| c.k() + c.l() == 6));
        assert!(Family::<i64>::new(5).is_err());
    }

    #[test]
    fn satellite_formula() {
        let u = UnknotCompanion::<i64>::new(2, 1).unwrap();
        assert_eq!(satellite_invariants(&u, 0, &5, &0), (5, 0));
        assert_eq!(satellite_invariants(&u, 0, &-8, &-3), (-8, -3));
        let u = UnknotCompanion::<i64>::new(0, 0).unwrap();
        assert_eq!(satellite_invariants(&u, 2, &0, &0), (-4, 0));
    }

    #[test]
    fn parity_conditions() {
        assert!(!theorem1_applicable(&cf(&[6, 1, 7, 1, 2])));
        assert!(!theorem1_applicable(&cf(&[6, 1, 7, 2, 3])));
        assert!(theorem1_applicable(&cf(&[6, 1, 3, 2, 2])));
        assert!(theorem1_applicable(&cf(&[4, 1, 3])));
        assert!(!theorem1_applicable(&cf(&[5, 1, 3])));
        assert!(!theorem1_applicable(&cf(&[4])));
    }

    #[test]
    fn companion_knots() {
        assert_eq!(k0_of(&cf(&[6, 1, 7, 1, 2])).unwrap(), fr(26, 49));
        assert_eq!(k0_of(&cf(&[6, 1, 7, 3, 2])).unwrap(), fr(58, 109));
        assert_eq!(k0_of(&cf(&[130, 2, 1, 3, 1])).unwrap(), fr(14, 19));
        assert!(k0_of(&cf(&[3])).is_err());
    }

    #[test]
    fn bound_arithmetic() {
        assert_eq!(realization_bound(&130i64, &2), 9);
        assert_eq!(realization_bound(&6i64, &0), 2);
        assert_eq!(realization_bound(&4i64, &0), 1);
        assert_eq!(realization_bound(&34i64, &3), 2);
        assert_eq!(realization_bound(&2i64, &1000), 1);
        let big = BigInt::from(10).pow(40);
        assert_eq!(realization_bound(&big, &BigInt::from(2)), BigInt::from(10).pow(40) / 16);
    }

    #[test]
    fn worked_example_large_rank() {
        let c = certify(&fr(14, 1825));
        assert_eq!(c.winding, Some(0));
        assert_eq!(c.tb, Some(-8));
        assert_eq!(c.rot, Some(-3));
        assert_eq!(c.sl, Some(-5));
        assert_eq!(c.alexander_grading, Some(-2));
        assert_eq!(c.k0, Some(fr(14, 19)));
        assert_eq!(c.rank_r, Some(2));
        assert_eq!(c.bound_n, Some(9));
        assert_eq!(c.path, CertificatePath::RankBound);
        assert_eq!(c.verdict, Verdict::NonSimple);
        assert_eq!(transverse_view(&c).unwrap(), (-5, 9));
    }

    #[test]
    fn worked_example_vanishing_rank() {
        let c = certify(&fr(26, 179));
        assert_eq!(c.cf, Some(cf(&[6, 1, 7, 1, 2])));
        assert_eq!(c.writhe, Some(7));
        assert_eq!(c.tb, Some(5));
        assert_eq!(c.rot, Some(0));
        assert_eq!(c.alexander_grading, Some(3));
        assert_eq!(c.rank_r, Some(0));
        assert_eq!(c.bound_n, Some(2));
        assert_eq!(c.genus.as_ref().unwrap().genus, Some(4));
        assert_eq!(c.path, CertificatePath::RankBound);
        assert_eq!(c.verdict, Verdict::NonSimple);
        assert_eq!(transverse_view(&c).unwrap().0, 5);
    }

    #[test]
    fn inapplicable_inputs() {
        use InapplicableReason as R;
        assert_eq!(certify(&fr(1, 3)).path, CertificatePath::Inapplicable(R::TorusKnot));
        assert_eq!(certify(&fr(1, 2)).path, CertificatePath::Inapplicable(R::Link));
        // [5 1 3]: odd a1.
        let f = cf_value(&cf(&[5, 1, 3])).unwrap();
        assert_eq!(certify(&f).path, CertificatePath::Inapplicable(R::OddLeadingTerm));
        // [4 2 1]: one term with c odd and d even, total b.
        let f = cf_value(&cf(&[4, 2, 1])).unwrap();
        let c = certify(&f);
        assert_eq!(c.path, CertificatePath::Inapplicable(R::WindingTwo));
        assert_eq!(c.winding, Some(2));
        assert!(transverse_view(&c).is_err());
    }

    #[test]
    fn inconclusive_when_bound_is_one() {
        let f = cf_value(&cf(&[4, 1, 3])).unwrap();
        let c = certify(&f);
        assert_eq!(c.path, CertificatePath::Theorem1);
        assert_eq!(c.bound_n, Some(1));
        assert_eq!(c.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn json_shape() {
        let c = certify(&fr(26, 179));
        let j = c.to_json();
        let keys: Vec<&str> = j.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys[0], "input");
        assert_eq!(*keys.last().unwrap(), "notes");
        assert_eq!(j["bound_n"], Value::from(2));
        assert_eq!(j["delta_k0"], Value::from("4t^{-2} - 12t^{-1} + 17 - 12t^{1} + 4t^{2}"));
        assert_eq!(j["family"]["size"], Value::from(3));
        let big = certify(&Fraction::<BigInt>::new(BigInt::from(26), BigInt::from(179)).unwrap());
        assert_eq!(big.to_json(), j);
    }

    fn parity_cf() -> impl Strategy<Value = Vec<i64>> {
        (1usize..=3, 1i64..=3)
            .prop_flat_map(|(m, half)| (Just(2 * half), proptest::collection::vec(1i64..=7, 2 * m)))
            .prop_map(|(a1, mut rest)| {
                if rest[0] % 2 == 0 {
                    rest[0] -= 1;
                }
                for i in (2..rest.len()).step_by(2) {
                    if rest[i] % 2 == 1 {
                        rest[i] += 1;
                    }
                }
                let mut v = vec![a1];
                v.extend(rest);
                v
            })
            .prop_filter("odd sum of odd-indexed terms", |v| {
                v.iter().skip(2).step_by(2).sum::<i64>() % 2 == 1
            })
    }

    proptest! {
        #[test]
        fn parity_family_certificates(terms in parity_cf()) {
            let c0 = cf(&terms);
            prop_assert!(theorem1_applicable(&c0));
            let c = certify(&cf_value(&c0).unwrap());
            let sum: i64 = terms.iter().skip(2).step_by(2).sum();
            prop_assert_eq!(c.path, CertificatePath::Theorem1);
            prop_assert_eq!(c.rot, Some(0));
            prop_assert_eq!(c.tb, Some(sum));
            prop_assert_eq!(c.alexander_grading, Some((sum + 1) / 2));
            prop_assert!(c.genus.unwrap().genus.unwrap() < (sum + 1) / 2);
            prop_assert_eq!(c.bound_n, Some((terms[0] + 3) / 4));
        }
    }
}
