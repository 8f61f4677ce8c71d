//! Registry of the Catalan-family identities, each checked exactly over a
//! range of its index, plus Hankel positivity checks for moment sequences.
//!
//! Every identity is a list of *chains*: groups of expressions that must all
//! be equal for a given index. A builder turns an index into its chains and
//! the runner compares every side of a chain against the first one.

mod builders;
mod hankel;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{QuadElement, Rational};
use crate::polynomials::Polynomial;

pub use hankel::{determinant, hankel_check, hankel_minors, hankel_sequence, HankelFamily, HankelMinors};

/// One expression in a chain of equalities.
#[derive(Debug, Clone, PartialEq)]
pub enum SideValue {
    Number(Rational),
    Poly(Polynomial<Rational>),
    Quad(QuadElement),
}

impl SideValue {
    /// Adds one to the value (to the constant coefficient for polynomials,
    /// to the rational part for quadratic elements).
    fn perturb(&mut self) {
        match self {
            SideValue::Number(r) => *r += &Rational::one(),
            SideValue::Poly(p) => *p = &*p + &Polynomial::one(),
            SideValue::Quad(q) => {
                *q = q.add(&QuadElement::one(q.algebra())).expect("same algebra");
            }
        }
    }
}

impl fmt::Display for SideValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SideValue::Number(r) => write!(f, "{r}"),
            SideValue::Poly(p) => write!(f, "{p}"),
            SideValue::Quad(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Side {
    pub label: &'static str,
    pub value: SideValue,
}

/// Expressions asserted equal to one another.
#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    pub name: &'static str,
    pub sides: Vec<Side>,
}

impl Chain {
    pub(crate) fn new(name: &'static str) -> Self {
        Chain { name, sides: Vec::new() }
    }

    pub(crate) fn side(mut self, label: &'static str, value: SideValue) -> Self {
        self.sides.push(Side { label, value });
        self
    }

    pub(crate) fn num(self, label: &'static str, value: Rational) -> Self {
        self.side(label, SideValue::Number(value))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// The four polynomial forms in `t`.
    Prop1i,
    /// The four polynomial forms in `x = t/(1 − t)`.
    Prop1ii,
    /// Specialization `t = 2`.
    Ex1a,
    /// Specialization `t = e^{iπ/3}` with real and imaginary parts.
    Ex1b,
    /// Specialization `t = (1 + √5)/2` with Lucas and Fibonacci forms.
    Ex1c,
    /// Specialization `x = 1`.
    Ex2a,
    /// Specialization `x = −1/2` and its link to Fine numbers.
    Ex2b,
    /// Limit `x → −1` after dividing by `x + 1`.
    Ex2c,
    /// Fine numbers through the three triangles.
    Fine,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        self.entry().name
    }

    pub fn entry(self) -> &'static IdentityEntry {
        REGISTRY.iter().find(|e| e.id == self).expect("every id is registered")
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        REGISTRY
            .iter()
            .find(|e| e.name == s)
            .map(|e| e.id)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// Registry row: how to build an identity and which indices it covers.
pub struct IdentityEntry {
    pub id: IdentityId,
    pub name: &'static str,
    pub description: &'static str,
    /// Name of the swept index (`m` or `n`).
    pub index: &'static str,
    /// Smallest index the identity holds for.
    pub first: u32,
    /// Upper end of the default sweep.
    pub default_max: u32,
    pub build: fn(u32) -> Vec<Chain>,
}

static REGISTRY: [IdentityEntry; 9] = [
    IdentityEntry {
        id: IdentityId::Prop1i,
        name: "prop1i",
        description: "four polynomial forms in t of (1-t)^m M_2m / p^m",
        index: "m",
        first: 1,
        default_max: 15,
        build: builders::prop1i,
    },
    IdentityEntry {
        id: IdentityId::Prop1ii,
        name: "prop1ii",
        description: "four polynomial forms in x after t = x/(1+x)",
        index: "m",
        first: 1,
        default_max: 15,
        build: builders::prop1ii,
    },
    IdentityEntry {
        id: IdentityId::Ex1a,
        name: "ex1a",
        description: "t = 2",
        index: "m",
        first: 1,
        default_max: 20,
        build: builders::ex1a,
    },
    IdentityEntry {
        id: IdentityId::Ex1b,
        name: "ex1b",
        description: "t = e^{i pi/3}, exact in Q(omega), with real/imaginary split",
        index: "m",
        first: 1,
        default_max: 18,
        build: builders::ex1b,
    },
    IdentityEntry {
        id: IdentityId::Ex1c,
        name: "ex1c",
        description: "t = golden ratio, exact in Q(sqrt5), with Lucas/Fibonacci forms",
        index: "m",
        first: 1,
        default_max: 20,
        build: builders::ex1c,
    },
    IdentityEntry {
        id: IdentityId::Ex2a,
        name: "ex2a",
        description: "x = 1",
        index: "m",
        first: 1,
        default_max: 20,
        build: builders::ex2a,
    },
    IdentityEntry {
        id: IdentityId::Ex2b,
        name: "ex2b",
        description: "x = -1/2 and the signed Fine number",
        index: "m",
        first: 1,
        default_max: 20,
        build: builders::ex2b,
    },
    IdentityEntry {
        id: IdentityId::Ex2c,
        name: "ex2c",
        description: "limit x -> -1 of the x-forms divided by x + 1",
        index: "m",
        first: 1,
        default_max: 20,
        build: builders::ex2c,
    },
    IdentityEntry {
        id: IdentityId::Fine,
        name: "fine",
        description: "Fine numbers through the B, T and S triangles",
        index: "n",
        first: 0,
        default_max: 15,
        build: builders::fine,
    },
];

/// All identities, in a fixed order.
pub fn registry() -> &'static [IdentityEntry] {
    &REGISTRY
}

/// Deliberate corruption of one side, to check that the runner notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mutation {
    /// Index value at which to corrupt.
    pub at: u32,
    /// Position of the chain in the builder's output.
    pub chain: usize,
    /// Position of the side within that chain.
    pub side: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub side: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, String>,
    pub chain: String,
    pub lhs: NamedValue,
    pub rhs: NamedValue,
}

/// Outcome of one verification; `passed` iff `counterexample` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub range: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub(crate) fn new(id: String, range: String, counterexample: Option<Counterexample>) -> Self {
        IdentityReport { id, range, passed: counterexample.is_none(), counterexample }
    }
}

/// First pair of unequal sides in the chains, if any.
fn first_mismatch(chains: &[Chain]) -> Option<(&Chain, &Side, &Side)> {
    chains.iter().find_map(|chain| {
        let (head, rest) = chain.sides.split_first()?;
        rest.iter().find(|s| s.value != head.value).map(|s| (chain, head, s))
    })
}

fn run(id: IdentityId, max: u32, mutation: Option<Mutation>) -> Result<IdentityReport> {
    let entry = id.entry();
    if max < entry.first {
        return Err(Error::Usage(format!("{} needs {}Max >= {}", entry.name, entry.index, entry.first)));
    }
    let range = format!("{}={}..={}", entry.index, entry.first, max);
    for index in entry.first..=max {
        let mut chains = (entry.build)(index);
        if let Some(mu) = mutation.filter(|mu| mu.at == index) {
            let side = chains
                .get_mut(mu.chain)
                .and_then(|c| c.sides.get_mut(mu.side))
                .ok_or_else(|| Error::Usage(format!("no side {}/{} in {}", mu.chain, mu.side, entry.name)))?;
            side.value.perturb();
        }
        if let Some((chain, lhs, rhs)) = first_mismatch(&chains) {
            let counterexample = Counterexample {
                params: BTreeMap::from([(entry.index.to_string(), index.to_string())]),
                chain: chain.name.to_string(),
                lhs: NamedValue { side: lhs.label.into(), value: lhs.value.to_string() },
                rhs: NamedValue { side: rhs.label.into(), value: rhs.value.to_string() },
            };
            return Ok(IdentityReport::new(entry.name.into(), range, Some(counterexample)));
        }
    }
    Ok(IdentityReport::new(entry.name.into(), range, None))
}

/// Verifies `id` for every index from its first value through `max`.
pub fn verify(id: IdentityId, max: u32) -> Result<IdentityReport> {
    run(id, max, None)
}

/// As [`verify`], with one side corrupted at `mutation.at`.
pub fn verify_mutated(id: IdentityId, max: u32, mutation: Mutation) -> Result<IdentityReport> {
    run(id, max, Some(mutation))
}

/// The chains of `id` at a single index, for inspection.
pub fn chains_at(id: IdentityId, index: u32) -> Result<Vec<Chain>> {
    let entry = id.entry();
    if index < entry.first {
        return Err(Error::Usage(format!("{} starts at {}={}", entry.name, entry.index, entry.first)));
    }
    Ok((entry.build)(index))
}

pub fn verify_prop1i(m_max: u32) -> Result<IdentityReport> {
    verify(IdentityId::Prop1i, m_max)
}

pub fn verify_prop1ii(m_max: u32) -> Result<IdentityReport> {
    verify(IdentityId::Prop1ii, m_max)
}

pub fn verify_ex1a(m_max: u32) -> Result<IdentityReport> {
    verify(IdentityId::Ex1a, m_max)
}

pub fn verify_ex1b(m_max: u32) -> Result<IdentityReport> {
    verify(IdentityId::Ex1b, m_max)
}

pub fn verify_ex1c(m_max: u32) -> Result<IdentityReport> {
    verify(IdentityId::Ex1c, m_max)
}

pub fn verify_ex2a(m_max: u32) -> Result<IdentityReport> {
    verify(IdentityId::Ex2a, m_max)
}

pub fn verify_ex2b(m_max: u32) -> Result<IdentityReport> {
    verify(IdentityId::Ex2b, m_max)
}

pub fn verify_ex2c(m_max: u32) -> Result<IdentityReport> {
    verify(IdentityId::Ex2c, m_max)
}

pub fn verify_fine(n_max: u32) -> Result<IdentityReport> {
    verify(IdentityId::Fine, n_max)
}
