use twobridge::{BigContinuedFraction, BigFraction};

/// A knot given either as `p/q` or as a continued fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotInput {
    pub fraction: BigFraction,
    /// Set when the input was an expansion that had to be rewritten to odd length.
    pub normalized_from: Option<BigContinuedFraction>,
}

pub fn parse_knot(text: &str) -> twobridge::Result<KnotInput> {
    let t = text.trim();
    if t.contains('/') {
        return Ok(KnotInput {
            fraction: BigFraction::parse(t)?,
            normalized_from: None,
        });
    }
    let cf = BigContinuedFraction::parse(t)?;
    let fraction = cf.value()?;
    let normalized_from = (!cf.is_odd_length()).then_some(cf);
    Ok(KnotInput {
        fraction,
        normalized_from,
    })
}
