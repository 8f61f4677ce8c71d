use std::fmt;
use std::sync::{Arc, LazyLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// The algebra `Q[θ]/(θ² − p·θ − q)`, i.e. `θ² = p_coef·θ + q_coef`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadAlgebra {
    p_coef: Rational,
    q_coef: Rational,
}

static SQRT5: LazyLock<Arc<QuadAlgebra>> = LazyLock::new(|| QuadAlgebra::new(Rational::zero(), Rational::from(5)));
static ZETA6: LazyLock<Arc<QuadAlgebra>> = LazyLock::new(|| QuadAlgebra::new(Rational::one(), Rational::from(-1)));

impl QuadAlgebra {
    pub fn new(p_coef: Rational, q_coef: Rational) -> Arc<Self> {
        Arc::new(QuadAlgebra { p_coef, q_coef })
    }

    /// `θ = √5`.
    pub fn sqrt5() -> Arc<Self> {
        SQRT5.clone()
    }

    /// `θ = ω = e^{iπ/3}`, with `ω² = ω − 1`.
    pub fn zeta6() -> Arc<Self> {
        ZETA6.clone()
    }

    pub fn p_coef(&self) -> &Rational {
        &self.p_coef
    }

    pub fn q_coef(&self) -> &Rational {
        &self.q_coef
    }

    /// Short name of the shipped instances; `None` for any other algebra.
    pub fn name(&self) -> Option<&'static str> {
        if *self == *SQRT5.as_ref() {
            Some("sqrt5")
        } else if *self == *ZETA6.as_ref() {
            Some("zeta6")
        } else {
            None
        }
    }

    pub fn by_name(name: &str) -> Option<Arc<Self>> {
        match name {
            "sqrt5" => Some(Self::sqrt5()),
            "zeta6" => Some(Self::zeta6()),
            _ => None,
        }
    }

    pub fn is_zeta6(&self) -> bool {
        *self == *ZETA6.as_ref()
    }
}

impl fmt::Debug for QuadAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => write!(f, "QuadAlgebra({name})"),
            None => write!(f, "QuadAlgebra(θ² = {}·θ + {})", self.p_coef, self.q_coef),
        }
    }
}

/// `a + b·θ` in a fixed [`QuadAlgebra`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElement {
    a: Rational,
    b: Rational,
    alg: Arc<QuadAlgebra>,
}

impl QuadElement {
    pub fn new(alg: &Arc<QuadAlgebra>, a: Rational, b: Rational) -> Self {
        QuadElement { a, b, alg: alg.clone() }
    }

    pub fn from_rational(alg: &Arc<QuadAlgebra>, a: Rational) -> Self {
        Self::new(alg, a, Rational::zero())
    }

    pub fn zero(alg: &Arc<QuadAlgebra>) -> Self {
        Self::from_rational(alg, Rational::zero())
    }

    pub fn one(alg: &Arc<QuadAlgebra>) -> Self {
        Self::from_rational(alg, Rational::one())
    }

    /// The generator `θ` itself.
    pub fn theta(alg: &Arc<QuadAlgebra>) -> Self {
        Self::new(alg, Rational::zero(), Rational::one())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn algebra(&self) -> &Arc<QuadAlgebra> {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn same_algebra(&self, other: &QuadElement) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, rhs: &QuadElement) -> Result<QuadElement> {
        self.same_algebra(rhs)?;
        Ok(QuadElement { a: &self.a + &rhs.a, b: &self.b + &rhs.b, alg: self.alg.clone() })
    }

    pub fn sub(&self, rhs: &QuadElement) -> Result<QuadElement> {
        self.same_algebra(rhs)?;
        Ok(QuadElement { a: &self.a - &rhs.a, b: &self.b - &rhs.b, alg: self.alg.clone() })
    }

    /// `(a + bθ)(c + dθ) = (ac + bd·q) + (ad + bc + bd·p)θ`.
    pub fn mul(&self, rhs: &QuadElement) -> Result<QuadElement> {
        self.same_algebra(rhs)?;
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a + &bd * self.alg.q_coef();
        let b = &self.a * &rhs.b + &self.b * &rhs.a + &bd * self.alg.p_coef();
        Ok(QuadElement { a, b, alg: self.alg.clone() })
    }

    pub fn neg(&self) -> QuadElement {
        QuadElement { a: -&self.a, b: -&self.b, alg: self.alg.clone() }
    }

    pub fn scale(&self, k: &Rational) -> QuadElement {
        QuadElement { a: &self.a * k, b: &self.b * k, alg: self.alg.clone() }
    }

    /// Square-and-multiply; `x^0 = 1`.
    pub fn pow(&self, mut n: u64) -> QuadElement {
        let mut acc = QuadElement::one(&self.alg);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same algebra");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same algebra");
            }
        }
        acc
    }

    /// Real part and imaginary coefficient of an element of `Q(ω)`.
    ///
    /// With `ω = 1/2 + i·√3/2`, `a + bω = (a + b/2) + i·b·(√3/2)`; the second
    /// component is `b`, the coefficient of `√3/2`.
    pub fn zeta6_parts(&self) -> Result<(Rational, Rational)> {
        if !self.alg.is_zeta6() {
            return Err(Error::Usage("zeta6_parts requires an element of Q(ω)".into()));
        }
        let half = Rational::new(1, 2).expect("nonzero");
        Ok((&self.a + &self.b * &half, self.b.clone()))
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.alg.name() {
            Some("sqrt5") => "√5",
            Some("zeta6") => "ω",
            _ => "θ",
        };
        write!(f, "{} + {}·{}", self.a, self.b, sym)
    }
}

impl fmt::Debug for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct QuadWire {
    a: Rational,
    b: Rational,
    alg: String,
}

impl Serialize for QuadElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let alg =
            self.alg.name().ok_or_else(|| serde::ser::Error::custom("only sqrt5 and zeta6 elements serialize"))?;
        QuadWire { a: self.a.clone(), b: self.b.clone(), alg: alg.into() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = QuadWire::deserialize(deserializer)?;
        let alg = QuadAlgebra::by_name(&wire.alg)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown algebra {:?}", wire.alg)))?;
        Ok(QuadElement::new(&alg, wire.a, wire.b))
    }
}
