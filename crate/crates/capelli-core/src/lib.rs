//! Exact computer algebra for quantum Capelli interpolation polynomials.
//!
//! Everything here is exact: coefficients live in the fraction field of a
//! one- or two-parameter polynomial ring over arbitrary-precision rationals
//! (`ℚ(q,t)`, its `t = q^r` specialization `ℚ(q)`, or the classical-limit
//! field `ℚ(r)`), and polynomials in the main variables `z_1..z_n` carry
//! those fractions as coefficients. No floating point is used anywhere.
//!
//! The layers, bottom to top:
//!
//! * [`field`] — parameter polynomials, exact GCD, canonical fractions,
//!   specialization, and the exact `q → 1` limit calculus.
//! * [`zpoly`] — sparse (Laurent) polynomials in `z_1..z_n` and evaluation
//!   at spectral points.
//! * [`weights`] — compositions, the spectral points attached to them, the
//!   extended and inclusion orders, diagram statistics, and normalization
//!   factors.
//! * [`ops`] — Demazure-Lusztig operators, the Knop-Cherednik commuting
//!   family `Ξ_i`, the raising words `Z_i`, and their classical (`r`)
//!   counterparts.
//! * [`construct`] — the polynomial families themselves (`E_λ`, `P_λ`,
//!   their normalized and homogeneous-top versions, and the classical
//!   `Ẽ_λ`, `P̃_λ`), each buildable along independent routes.
//! * [`suite`] — the named verification suites that exercise the defining
//!   properties and cross-route agreements.

pub mod construct;
pub mod error;
pub mod field;
pub mod linalg;
pub mod ops;
pub mod suite;
pub mod weights;
pub mod zpoly;

pub use construct::{Family, LabeledPolynomial, PolyStore, Route};
pub use suite::{SuiteConfig, SuiteName, SuiteReport};
pub use error::Error;
pub use field::{BigRational, FieldElement, ParamPolynomial, ParamSet};
pub use weights::{Composition, DiagramBox, NormKind, Permutation};
pub use zpoly::{Exponents, SpectralPoint, ZPolynomial};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
