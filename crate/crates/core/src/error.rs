use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
    #[error("fraction {0} is not strictly between 0 and 1")]
    FractionOutOfRange(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("continued fraction has no terms")]
    EmptyContinuedFraction,
    #[error("continued fraction term {0} is not a positive integer")]
    NonPositiveTerm(String),
    #[error("continued fraction {0} must have odd length 2m+1 with m >= 1")]
    NoPattern(String),
    #[error("pattern must have at least one term")]
    EmptyPattern,
    #[error("pattern term (c={c}, d={d}) must have c >= 1 and d >= 1")]
    InvalidTerm { c: String, d: String },
    #[error("{0} has even determinant and is a two-component link, not a knot")]
    NotAKnot(String),
    #[error("determinant {det} exceeds the bound {bound}")]
    BoundExceeded { det: String, bound: String },
    #[error("value {0} does not fit the machine integer range needed here")]
    Overflow(String),
    #[error("signature {0} is odd")]
    OddSignature(String),
    #[error("orientation state {0} is not reachable (position 4 must point out, exactly two positions out)")]
    UnreachableState(String),
    #[error("polynomial is not palindromic and cannot be symmetrized: {0}")]
    NotSymmetric(String),
    #[error("certificate is not applicable: {0}")]
    Inapplicable(String),
    #[error("transition table derivation failed: {0}")]
    TableDerivation(String),
    #[error("diagram traversal failed: {0}")]
    Traversal(String),
    #[error("table fixture is malformed: {0}")]
    Fixture(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
