//! Exact-arithmetic toolkit for *expansive* polynomials — integer polynomials
//! whose roots all lie strictly outside the complex unit circle.
//!
//! The crate provides:
//!
//! * [`poly`] — arbitrary-precision integer polynomials, exact evaluation,
//!   coefficient measures (height, length, Mahler measure) and the elementary
//!   transforms (sign normalization, reversal, Schur transform, argument
//!   scaling).
//! * [`linalg`] — fraction-free (Bareiss) determinants over the integers,
//!   with per-step growth instrumentation and the Hadamard bound.
//! * [`expansivity`] — the decision engines: the determinant conditions
//!   `D_k^±(f) > 0`, the classical Schur–Cohn chain, unit-circle root
//!   counting, the coefficient-box prefilter, radius-`s` certification and
//!   certified gap lower bounds via exact bisection.
//! * [`dpoly`] — symbolic determinant polynomials `D̃_k^±(f)(x)`, the
//!   pair-product polynomial with roots `α_i·α_j`, and expansion term counts.
//! * [`bounds`] — closed-form lower bounds on the expansivity gap
//!   `min |α_i| − 1` in terms of `|a_0|`, `|a_0|+|a_n|`, the height and the
//!   length, plus the Liouville inequality right-hand side.
//! * [`oracle`] — a floating-point simultaneous root finder used only as an
//!   independent cross-check; it never overrides the exact engines.
//! * [`enumerate`] — exhaustive census of expansive polynomials with a given
//!   degree and constant term.
//!
//! All values are immutable and all operations are pure, so everything here
//! can be used freely across threads.

pub mod bounds;
pub mod dpoly;
pub mod enumerate;
mod error;
pub mod expansivity;
pub mod linalg;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use expansivity::{ExpansivityVerdict, Strategy};
pub use poly::{IntPolynomial, Rational};
