//! Exact scalars: reduced big rationals and elements of degree-two algebras
//! `Q[θ]/(θ² − pθ − q)`.

mod quad;
mod rational;

pub use quad::{QuadAlgebra, QuadElement};
pub use rational::Rational;
