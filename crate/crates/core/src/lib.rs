//! Exact-arithmetic invariants of torsion-free sheaves on ribbons.
//!
//! A ribbon is a non-reduced projective curve whose reduction is a smooth
//! curve and whose nilradical is a square-zero line bundle. Everything a
//! torsion-free sheaf on a ribbon carries numerically -- complete type,
//! generalized rank and degree, stratification data, slope-stability
//! conditions, tangent-space codimensions -- is determined by a handful of
//! integers, and this crate computes all of it in exact arithmetic.
//!
//! Module map:
//!
//! * [`invariants`] -- ribbon invariants, complete types, Riemann-Roch,
//!   duality, generalized line/vector bundle arithmetic.
//! * [`strata`] -- admissibility, stratum dimensions, the specialization
//!   order, irreducible components, generic Segre invariants.
//! * [`semistability`] -- numerical (semi)stability tests, finite
//!   enumeration of stability-compatible strata, slope-inequality lemmas.
//! * [`localalg`] -- graded modules over the truncated ribbon local ring
//!   and brute-force Hom/Ext verification over prime fields.
//! * [`tangent`] -- local type profiles and the invariants attached to
//!   them (index, gamma, endomorphism type, tangent codimensions).
//!
//! No floating point is used anywhere; slopes are exact rationals and all
//! inequality tests reduce to integer comparisons.

pub mod error;
pub mod invariants;
pub mod localalg;
pub mod rational;
pub mod semistability;
pub mod strata;
pub mod tangent;

pub use error::{Error, Result};
pub use invariants::{CompleteType, RibbonInvariants};
pub use rational::Rational;
