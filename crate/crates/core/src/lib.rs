//! Exact even moments of the Kesten distribution and the identities between
//! Catalan numbers, Catalan triangles, ballot numbers, Fibonacci, Lucas and
//! Fine numbers that follow from computing those moments in different ways.
//!
//! * [`exact`]: reduced big rationals and degree-two algebras (`Q(√5)`, `Q(ω)`).
//! * [`sequences`]: the integer sequences.
//! * [`polynomials`]: dense exact polynomials.
//! * [`moments`]: six exact formulas for `M_{2m}(p, r)` and the four forms in `t`.
//! * [`identities`]: the identity registry and Hankel checks.
//! * [`quadrature`]: floating-point oracle integrating the density directly.

pub mod error;
pub mod exact;
pub mod identities;
pub mod moments;
pub mod polynomials;
pub mod quadrature;
pub mod sequences;

pub use error::{Error, Result};
pub use exact::{QuadAlgebra, QuadElement, Rational};
pub use polynomials::Polynomial;
