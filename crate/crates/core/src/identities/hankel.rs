//! Hankel positivity tests for the moment-sequence claims.
//!
//! A sequence `s_0, s_1, …` is the moment sequence of a measure on
//! `[0, ∞)` (Stieltjes) iff both `H = (s_{i+j})` and the shifted
//! `H' = (s_{i+j+1})` are positive semidefinite. We check the leading
//! principal minors of both for nonnegativity, with exact determinants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Counterexample, IdentityReport, NamedValue};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::moments::{moment_closed, KestenParams};
use crate::sequences::catalan_prefix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HankelFamily {
    /// `s_m = M_{2m}(1, t)`, i.e. `M_{2m}(p, r)/p^m` at `t = r/p`.
    KestenEven,
    /// `s_m = 1 − d Σ_{k<m} t^{k+1}(1 − t)^k C_k`.
    TruncatedConvex,
}

impl HankelFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            HankelFamily::KestenEven => "kestenEven",
            HankelFamily::TruncatedConvex => "truncatedConvex",
        }
    }
}

impl fmt::Display for HankelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HankelFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kestenEven" => Ok(HankelFamily::KestenEven),
            "truncatedConvex" => Ok(HankelFamily::TruncatedConvex),
            _ => Err(Error::Parse(format!("unknown Hankel family {s:?}"))),
        }
    }
}

fn check_range(family: HankelFamily, t: &Rational, d: &Rational) -> Result<()> {
    let lo = Rational::new(1, 2).expect("nonzero");
    let hi = Rational::new(6, 5).expect("nonzero");
    if *t < lo || *t > hi {
        return Err(Error::Parameter(format!("t must lie in [1/2, 6/5], got {t}")));
    }
    if family == HankelFamily::TruncatedConvex && (d.is_negative() || *d > Rational::one()) {
        return Err(Error::Parameter(format!("d must lie in [0, 1], got {d}")));
    }
    Ok(())
}

/// `s_0 … s_{len−1}` for the family at `(t, d)`; `d` is ignored for
/// [`HankelFamily::KestenEven`].
pub fn hankel_sequence(family: HankelFamily, t: &Rational, d: &Rational, len: usize) -> Result<Vec<Rational>> {
    check_range(family, t, d)?;
    match family {
        HankelFamily::KestenEven => {
            let params = KestenParams::classify(Rational::one(), t.clone())?;
            (0..len as u32).map(|m| moment_closed(m, &params).map(|v| v.value)).collect()
        }
        HankelFamily::TruncatedConvex => {
            let tu = t * (Rational::one() - t);
            let mut power = t.clone();
            let mut partial = Rational::zero();
            let mut out = Vec::with_capacity(len);
            for c in catalan_prefix(len) {
                out.push(Rational::one() - d * &partial);
                partial += &(&power * Rational::from(c));
                power *= &tu;
            }
            Ok(out)
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination after scaling each row
/// to integers.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = Rational::new(a[n - 1][n - 1].clone(), scale).expect("positive scale");
    if negate {
        -det
    } else {
        det
    }
}

fn leading_minors(seq: &[Rational], order: usize, shift: usize) -> Vec<Rational> {
    (1..=order)
        .map(|k| {
            let m: Vec<Vec<Rational>> = (0..k).map(|i| (0..k).map(|j| seq[i + j + shift].clone()).collect()).collect();
            determinant(&m)
        })
        .collect()
}

/// The sequence and the leading principal minors of `H` (orders
/// `1..=size+1`) and `H'` (orders `1..=size`), from `s_0 … s_{2·size}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelMinors {
    pub sequence: Vec<Rational>,
    pub plain: Vec<Rational>,
    pub shifted: Vec<Rational>,
}

pub fn hankel_minors(family: HankelFamily, t: &Rational, d: &Rational, size: usize) -> Result<HankelMinors> {
    if size == 0 {
        return Err(Error::Usage("Hankel size must be positive".into()));
    }
    let sequence = hankel_sequence(family, t, d, 2 * size + 1)?;
    let plain = leading_minors(&sequence, size + 1, 0);
    let shifted = leading_minors(&sequence, size, 1);
    Ok(HankelMinors { sequence, plain, shifted })
}

/// Passes iff every plain and shifted leading principal minor is `>= 0`.
pub fn hankel_check(family: HankelFamily, t: &Rational, d: &Rational, size: usize) -> Result<IdentityReport> {
    let minors = hankel_minors(family, t, d, size)?;
    let id = format!("hankel-{family}");
    let range = match family {
        HankelFamily::KestenEven => format!("t={t}, size={size}"),
        HankelFamily::TruncatedConvex => format!("t={t}, d={d}, size={size}"),
    };
    let negative = [("plain", &minors.plain), ("shifted", &minors.shifted)]
        .into_iter()
        .flat_map(|(kind, list)| list.iter().enumerate().map(move |(i, v)| (kind, i + 1, v)))
        .find(|(_, _, v)| v.is_negative());
    let counterexample = negative.map(|(kind, order, value)| {
        let mut params = BTreeMap::from([
            ("family".to_string(), family.to_string()),
            ("t".to_string(), t.to_string()),
            ("matrix".to_string(), kind.to_string()),
            ("order".to_string(), order.to_string()),
        ]);
        if family == HankelFamily::TruncatedConvex {
            params.insert("d".into(), d.to_string());
        }
        Counterexample {
            params,
            chain: "minor >= 0".into(),
            lhs: NamedValue { side: format!("{kind} minor of order {order}"), value: value.to_string() },
            rhs: NamedValue { side: "lower bound".into(), value: Rational::zero().to_string() },
        }
    });
    Ok(IdentityReport::new(id, range, counterexample))
}
