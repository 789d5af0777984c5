//! Exact invariants of n-punctured ball tangle diagrams.
//!
//! Every closure link of a tangle diagram is evaluated with the Kauffman
//! bracket at `A = exp(i*pi/4)`, where the loop factor `-A^2 - A^-2`
//! vanishes and only monocyclic states survive. The brackets are assembled
//! into a `2 x 2^n` integer matrix modulo sign ([`ProjMatrix`]), which
//! behaves well under hole filling, connect sums and the elementary
//! operations on spherical tangles.
//!
//! Layout:
//!
//! - [`diagram`]: planar diagram codes, the text format and builder tangles.
//! - [`bracket`]: state-sum and skein-recursive bracket evaluation.
//! - [`invariant`]: closures and the matrix invariant of a diagram.
//! - [`algebra`]: dictionary-order products, composition and connect-sum
//!   formulas, and diagram-level gluing.
//! - [`spherical`]: elementary operations on 2x2 projective matrices and the
//!   Coxeter structure of the group they generate.
//! - [`generate`]: seeded random planar diagrams for differential testing.
//!
//! The matrix algebra is generic over an exact integer [`Scalar`]; the
//! aliases below fix the common choices.

pub mod algebra;
pub mod bracket;
pub mod diagram;
pub mod generate;
pub mod invariant;
pub mod matrix;
pub mod scalar;
pub mod spherical;

pub use bracket::{bracket_recursive, bracket_statesum, BracketError, ZPhi, Zeta8};
pub use diagram::{LinkDiagram, TangleDiagram};
pub use invariant::{compute_invariant, determinant, ClosureKind, FillPattern};
pub use matrix::ProjMatrix;
pub use scalar::{Overflow, Scalar};

/// Projective matrices over 64-bit integers; the value type of the invariant.
pub type IntMatrix = ProjMatrix<i64>;

/// Projective matrices over 128-bit integers.
pub type WideMatrix = ProjMatrix<i128>;

/// Projective matrices over arbitrary-precision integers.
pub type BigMatrix = ProjMatrix<num_bigint::BigInt>;
