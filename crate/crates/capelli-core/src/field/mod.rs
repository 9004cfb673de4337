//! Coefficient fields: sparse parameter polynomials and canonical fractions.
//!
//! The main variables `z_1..z_n` never appear here; this layer only knows
//! about the *parameters* — either the pair `(q, t)`, the single `q` left
//! after substituting `t = q^r`, or the classical-limit parameter `r`.
//! [`ParamPolynomial`] is a sparse Laurent polynomial in those parameters
//! over arbitrary-precision rationals, and [`FieldElement`] is a fraction
//! of two genuine (non-Laurent) parameter polynomials kept in a canonical
//! reduced form, so that structural equality is mathematical equality.

mod element;
mod poly;

pub use element::FieldElement;
pub use poly::ParamPolynomial;

/// Arbitrary-precision rational, reduced, with positive denominator.
pub type BigRational = num::BigRational;

/// Arbitrary-precision integer.
pub type BigInt = num::BigInt;

/// The parameter alphabet a polynomial or fraction lives over.
///
/// At most two parameters ever occur at once; the set is part of every
/// value's identity and mixing sets in arithmetic is a programming error
/// (asserted, not silently coerced).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamSet {
    /// The generic two-parameter field `ℚ(q, t)`.
    QT,
    /// The one-parameter field `ℚ(q)` (image of `t ↦ q^r`).
    Q,
    /// The classical-limit field `ℚ(r)`.
    R,
}

impl ParamSet {
    /// Names of the parameters, in slot order.
    pub fn names(self) -> &'static [&'static str] {
        match self {
            ParamSet::QT => &["q", "t"],
            ParamSet::Q => &["q"],
            ParamSet::R => &["r"],
        }
    }

    /// Number of parameters (1 or 2).
    pub fn arity(self) -> usize {
        self.names().len()
    }

    /// Short tag used in cache keys and serialized documents.
    pub fn tag(self) -> &'static str {
        match self {
            ParamSet::QT => "qt",
            ParamSet::Q => "q",
            ParamSet::R => "r",
        }
    }

    /// Inverse of [`ParamSet::tag`].
    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "qt" => Some(ParamSet::QT),
            "q" => Some(ParamSet::Q),
            "r" => Some(ParamSet::R),
            _ => None,
        }
    }
}

/// Convenience: `BigRational` from a machine integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience: `BigRational` fraction from machine integers, `d ≠ 0`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    assert!(d != 0, "ratio denominator must be nonzero");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
