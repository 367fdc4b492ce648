use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer type the whole pipeline is generic over.
///
/// Implemented for every signed integer that `num` knows about, including
/// [`num_bigint::BigInt`].
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Lossless conversion from a small constant.
    ///
    /// Panics if the constant does not fit, which only happens for scalars
    /// narrower than the literals used inside this crate.
    fn lit(n: i64) -> Self {
        Self::from_i64(n).expect("integer literal does not fit the scalar type")
    }

    fn two() -> Self {
        Self::lit(2)
    }

    /// Parse a base-10 integer, allowing a leading `+` or `-`.
    fn parse_decimal(s: &str) -> Option<Self> {
        let s = s.trim();
        let digits = s.strip_prefix('+').unwrap_or(s);
        if digits.is_empty() {
            return None;
        }
        Self::from_str_radix(digits, 10).ok()
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn parses_signed_decimals() {
        assert_eq!(i64::parse_decimal("+17"), Some(17));
        assert_eq!(i64::parse_decimal(" -3 "), Some(-3));
        assert_eq!(i64::parse_decimal(""), None);
        assert_eq!(i64::parse_decimal("x1"), None);
        assert_eq!(
            BigInt::parse_decimal("123456789012345678901234567890"),
            Some("123456789012345678901234567890".parse().unwrap())
        );
    }
}
