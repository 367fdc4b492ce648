//! Combinatorial certificates of Legendrian and transverse non-simplicity
//! for two-bridge knots.
//!
//! The pipeline runs from a classifying fraction `q/D` through its odd-length
//! continued fraction, the solid-torus pattern built from the expansion, the
//! S₃ winding-number test, the writhe/cusp state machine, the classical
//! invariants of the satellite, the Alexander grading, and finally the knot
//! Floer rank of the companion knot `K₀`, which controls the lower bound on
//! the number of distinct Legendrian realizations.
//!
//! All arithmetic is exact. Everything numeric is generic over an integer
//! [`Scalar`]; the crate-root aliases pick [`BigInt`] so inputs of any size
//! are safe. Fixed-width scalars (`i64`, `i128`) work as well but overflow on
//! large inputs.

pub mod certify;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod pattern;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod tables;

pub use num_bigint::BigInt;

pub use certify::{
    certify, k0_of, satellite_invariants, theorem1_applicable, transverse_view, Certificate,
    CertificatePath, InapplicableReason, UnknotCompanion, Verdict,
};
pub use error::{Error, Result};
pub use invariants::{
    alexander_oracle, alexander_two_bridge, genus_bound, hfk_alternating, signature_oracle,
    signature_two_bridge, HfkEntry, HfkTable, SeifertGenus,
};
pub use oracle::{ClosedDiagram, Conventions, TangleWord, Traversal};
pub use pattern::{
    component_count, total_permutation, winding_number, Flow, OrientationState, Parity, Pattern,
    PatternInvariants, PatternTerm, TermTransition, TransitionTable,
};
pub use perm::Perm3;
pub use poly::LaurentPolynomial;
pub use rational::{equivalence, ContinuedFraction, Equivalence, Fraction};
pub use scalar::Scalar;

/// Fraction over arbitrary-precision integers.
pub type BigFraction = Fraction<BigInt>;
/// Continued fraction over arbitrary-precision integers.
pub type BigContinuedFraction = ContinuedFraction<BigInt>;
/// Laurent polynomial with arbitrary-precision coefficients.
pub type BigPolynomial = LaurentPolynomial<BigInt>;
/// Certificate over arbitrary-precision integers.
pub type BigCertificate = Certificate<BigInt>;

/// Fraction over `i64`, for hot loops over small determinants.
pub type Fraction64 = Fraction<i64>;
pub type ContinuedFraction64 = ContinuedFraction<i64>;
pub type Polynomial64 = LaurentPolynomial<i64>;
pub type Certificate64 = Certificate<i64>;
