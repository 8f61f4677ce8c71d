//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Coefficients are stored constant-term first with trailing zeros trimmed,
//! so two polynomials are equal exactly when their coefficient lists are.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{QuadAlgebra, QuadElement, Rational};

/// Scalars a [`Polynomial`] can carry.
///
/// `Ring` identifies the coefficient ring so that the zero polynomial, which
/// has no coefficients to inspect, still knows where it lives.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Ring: Clone + PartialEq + fmt::Debug;

    fn ring(&self) -> Self::Ring;
    fn zero_in(ring: &Self::Ring) -> Self;
    fn one_in(ring: &Self::Ring) -> Self;
    fn embed(ring: &Self::Ring, r: &Rational) -> Self;
    fn is_zero(&self) -> bool;

    // Both operands are known to share a ring when these are called.
    fn add_same(&self, rhs: &Self) -> Self;
    fn mul_same(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl Coefficient for Rational {
    type Ring = ();

    fn ring(&self) {}

    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }

    fn one_in(_: &()) -> Self {
        Rational::one()
    }

    fn embed(_: &(), r: &Rational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn add_same(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn mul_same(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn negate(&self) -> Self {
        -self
    }
}

impl Coefficient for QuadElement {
    type Ring = Arc<QuadAlgebra>;

    fn ring(&self) -> Arc<QuadAlgebra> {
        self.algebra().clone()
    }

    fn zero_in(ring: &Arc<QuadAlgebra>) -> Self {
        QuadElement::zero(ring)
    }

    fn one_in(ring: &Arc<QuadAlgebra>) -> Self {
        QuadElement::one(ring)
    }

    fn embed(ring: &Arc<QuadAlgebra>, r: &Rational) -> Self {
        QuadElement::from_rational(ring, r.clone())
    }

    fn is_zero(&self) -> bool {
        QuadElement::is_zero(self)
    }

    fn add_same(&self, rhs: &Self) -> Self {
        self.add(rhs).expect("ring checked by caller")
    }

    fn mul_same(&self, rhs: &Self) -> Self {
        self.mul(rhs).expect("ring checked by caller")
    }

    fn negate(&self) -> Self {
        self.neg()
    }
}

/// Dense polynomial; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C: Coefficient> {
    ring: C::Ring,
    coeffs: Vec<C>,
}

impl<C: Coefficient> Polynomial<C> {
    /// Builds a polynomial over `ring`; every coefficient must belong to it.
    pub fn new(ring: C::Ring, coeffs: Vec<C>) -> Result<Self> {
        if coeffs.iter().any(|c| c.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_parts(ring, coeffs))
    }

    fn from_parts(ring: C::Ring, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { ring, coeffs }
    }

    pub fn zero_in(ring: C::Ring) -> Self {
        Polynomial { ring, coeffs: Vec::new() }
    }

    pub fn constant_in(ring: C::Ring, c: C) -> Result<Self> {
        Self::new(ring, vec![c])
    }

    /// The indeterminate `x`.
    pub fn x_in(ring: C::Ring) -> Self {
        let coeffs = vec![C::zero_in(&ring), C::one_in(&ring)];
        Polynomial { ring, coeffs }
    }

    pub fn ring(&self) -> &C::Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(|| C::zero_in(&self.ring))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_same(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::from_parts(self.ring.clone(), coeffs))
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(C::negate).collect();
        Polynomial { ring: self.ring.clone(), coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    /// Schoolbook convolution.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero_in(self.ring.clone()));
        }
        let mut out = vec![C::zero_in(&self.ring); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_same(&a.mul_same(b));
            }
        }
        Ok(Self::from_parts(self.ring.clone(), out))
    }

    /// Multiplies every coefficient by a scalar of the same ring.
    pub fn scale(&self, k: &C) -> Result<Self> {
        if k.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        let coeffs = self.coeffs.iter().map(|c| c.mul_same(k)).collect();
        Ok(Self::from_parts(self.ring.clone(), coeffs))
    }

    /// `self^n`; `n = 0` gives the constant one.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Polynomial { ring: self.ring.clone(), coeffs: vec![C::one_in(&self.ring)] };
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, v: &C) -> Result<C> {
        if v.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.coeffs.iter().rev().fold(C::zero_in(&self.ring), |acc, c| acc.mul_same(v).add_same(c)))
    }

    /// Division by `x − root`: returns `(quotient, remainder)` with
    /// `self = (x − root)·quotient + remainder`.
    pub fn synthetic_div(&self, root: &C) -> Result<(Self, C)> {
        if root.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        let Some(deg) = self.degree() else {
            return Ok((self.clone(), C::zero_in(&self.ring)));
        };
        let mut quotient = vec![C::zero_in(&self.ring); deg];
        let mut carry = C::zero_in(&self.ring);
        for i in (0..=deg).rev() {
            carry = carry.mul_same(root).add_same(&self.coeffs[i]);
            if i > 0 {
                quotient[i - 1] = carry.clone();
            }
        }
        Ok((Self::from_parts(self.ring.clone(), quotient), carry))
    }
}

impl Polynomial<Rational> {
    /// Rational coefficients, constant term first.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self::from_parts((), coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::zero_in(())
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::x_in(())
    }

    /// `a + b·x`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_ints(&[a, b])
    }

    /// Evaluation at an element of a quadratic algebra, with the rational
    /// coefficients embedded into it.
    pub fn eval_quad(&self, v: &QuadElement) -> QuadElement {
        let alg = v.algebra();
        self.coeffs.iter().rev().fold(QuadElement::zero(alg), |acc, c| {
            acc.mul(v).expect("same algebra").add(&QuadElement::from_rational(alg, c.clone())).expect("same algebra")
        })
    }

    /// The same polynomial viewed over a quadratic algebra.
    pub fn embed_into(&self, alg: &Arc<QuadAlgebra>) -> Polynomial<QuadElement> {
        let coeffs = self.coeffs.iter().map(|c| QuadElement::from_rational(alg, c.clone())).collect();
        Polynomial { ring: alg.clone(), coeffs }
    }
}

/// Syntactic equality of normalized coefficient lists.
pub fn poly_eq<C: Coefficient>(a: &Polynomial<C>, b: &Polynomial<C>) -> bool {
    a == b
}

macro_rules! rational_poly_op {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&Polynomial<Rational>> for &Polynomial<Rational> {
            type Output = Polynomial<Rational>;
            fn $method(self, rhs: &Polynomial<Rational>) -> Polynomial<Rational> {
                Polynomial::$method(self, rhs).expect("rational ring is unique")
            }
        }
        impl std::ops::$trait<Polynomial<Rational>> for Polynomial<Rational> {
            type Output = Polynomial<Rational>;
            fn $method(self, rhs: Polynomial<Rational>) -> Polynomial<Rational> {
                Polynomial::$method(&self, &rhs).expect("rational ring is unique")
            }
        }
    };
}

rational_poly_op!(Add, add);
rational_poly_op!(Sub, sub);
rational_poly_op!(Mul, mul);

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·x")?,
                _ => write!(f, "({c})·x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|c| c.to_string())).finish()
    }
}

impl<C: Coefficient + Serialize> Serialize for Polynomial<C> {
    /// JSON array of coefficients, constant term first.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}
