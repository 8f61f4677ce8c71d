//! Exact integer sequences: Catalan numbers, the Catalan triangles `T` and
//! `B`, the ballot-type numbers `S`, Fibonacci and Lucas numbers (including
//! negative indices), and Fine numbers.
//!
//! Everything is computed with big integers; binomials use the
//! multiplicative formula, which keeps every intermediate value integral.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// `binom(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u32, k: i64) -> BigInt {
    if k < 0 || k > n as i64 {
        return BigInt::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = binom(n, i) here, so acc * (n - i) is divisible by i + 1
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Exact quotient; panics if `d` does not divide `n`, which would mean a
/// formula was transcribed wrongly.
fn exact_div(n: BigInt, d: u64) -> BigInt {
    let (q, r) = n.div_rem(&BigInt::from(d));
    assert!(r.is_zero(), "non-integral quotient in sequence formula");
    q
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigInt {
    exact_div(binomial(2 * n, n as i64), n as u64 + 1)
}

/// Catalan numbers `C_0..C_{len-1}` via `C_{n+1} = C_n·2(2n+1)/(n+2)`.
pub fn catalan_prefix(len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut c = BigInt::one();
    for n in 0..len as u64 {
        out.push(c.clone());
        c = exact_div(c * (2 * (2 * n + 1)), n + 2);
    }
    out
}

/// `T_{m,j} = (m − j + 1)/(m + 1) · binom(m + j, m)` (OEIS A009766), for
/// `m ≥ j ≥ 0`.
pub fn triangle_t(m: u32, j: u32) -> Result<BigInt> {
    if j > m {
        return Err(Error::IndexOutOfRange(format!("T({m},{j}) needs j <= m")));
    }
    let num = binomial(m + j, m as i64) * (m - j + 1);
    Ok(exact_div(num, m as u64 + 1))
}

/// `B_{k,j} = (j/k) · binom(2k, k − j)` (OEIS A039598), for `k ≥ j ≥ 1`.
pub fn triangle_b(k: u32, j: u32) -> Result<BigInt> {
    if j < 1 || j > k {
        return Err(Error::IndexOutOfRange(format!("B({k},{j}) needs 1 <= j <= k")));
    }
    let num = binomial(2 * k, (k - j) as i64) * j;
    Ok(exact_div(num, k as u64))
}

/// `S_{m,k} = binom(2m, k) − binom(2m, k − 1)` with `binom(2m, −1) = 0`, for
/// `0 ≤ k ≤ m`.
pub fn ballot_s(m: u32, k: u32) -> Result<BigInt> {
    if k > m {
        return Err(Error::IndexOutOfRange(format!("S({m},{k}) needs k <= m")));
    }
    Ok(binomial(2 * m, k as i64) - binomial(2 * m, k as i64 - 1))
}

/// `(F_n, F_{n+1})` for `n ≥ 0` by fast doubling.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n / 2);
    // F_{2k} = F_k(2F_{k+1} − F_k), F_{2k+1} = F_k² + F_{k+1}²
    let c = &a * (&b * 2 - &a);
    let d = &a * &a + &b * &b;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

fn minus_one_pow(e: u64) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Fibonacci numbers on all of `Z`; `F_{−k} = (−1)^{k−1} F_k`.
pub fn fibonacci(n: i64) -> BigInt {
    let k = n.unsigned_abs();
    let f = fib_pair(k).0;
    if n >= 0 || k == 0 {
        f
    } else {
        f * minus_one_pow(k - 1)
    }
}

/// Lucas numbers on all of `Z`; `L_{−k} = (−1)^k L_k`.
pub fn lucas(n: i64) -> BigInt {
    let k = n.unsigned_abs();
    let (f, f1) = fib_pair(k);
    // L_k = 2F_{k+1} − F_k
    let l = f1 * 2 - f;
    if n >= 0 {
        l
    } else {
        l * minus_one_pow(k)
    }
}

/// Fine numbers from `Φ_n = −Φ_{n−1}/2 + C_n/2`, `Φ_0 = 1`.
///
/// The value is carried as a [`Rational`] through the recurrence and checked
/// to be integral on return.
pub fn fine(n: u32) -> Rational {
    let half = Rational::new(1, 2).expect("nonzero");
    let catalans = catalan_prefix(n as usize + 1);
    let mut phi = Rational::one();
    for c in catalans.into_iter().skip(1) {
        phi = &half * (Rational::from(c) - phi);
    }
    assert!(phi.is_integer(), "Fine recurrence produced non-integer {phi} at n={n}");
    phi
}

/// The sequences the CLI can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SequenceId {
    Catalan,
    TriangleT,
    TriangleB,
    BallotS,
    Fibonacci,
    Lucas,
    Fine,
}

impl SequenceId {
    pub const ALL: [SequenceId; 7] = [
        SequenceId::Catalan,
        SequenceId::TriangleT,
        SequenceId::TriangleB,
        SequenceId::BallotS,
        SequenceId::Fibonacci,
        SequenceId::Lucas,
        SequenceId::Fine,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceId::Catalan => "catalan",
            SequenceId::TriangleT => "triangleT",
            SequenceId::TriangleB => "triangleB",
            SequenceId::BallotS => "ballotS",
            SequenceId::Fibonacci => "fibonacci",
            SequenceId::Lucas => "lucas",
            SequenceId::Fine => "fine",
        }
    }

    /// Two-index families.
    pub fn is_triangle(self) -> bool {
        matches!(self, SequenceId::TriangleT | SequenceId::TriangleB | SequenceId::BallotS)
    }

    /// Terms `start, start+1, …` (`count` of them) of a one-index sequence.
    /// Negative `start` is accepted only for Fibonacci and Lucas.
    pub fn terms(self, start: i64, count: usize) -> Result<Vec<BigInt>> {
        if self.is_triangle() {
            return Err(Error::Usage(format!("{self} is indexed by (row, col)")));
        }
        let negative_ok = matches!(self, SequenceId::Fibonacci | SequenceId::Lucas);
        if start < 0 && !negative_ok {
            return Err(Error::IndexOutOfRange(format!("{self} is defined for n >= 0")));
        }
        let index = |i: usize| start + i as i64;
        let nonneg = |i: usize| -> Result<u32> {
            u32::try_from(index(i)).map_err(|_| Error::IndexOutOfRange(format!("index {}", index(i))))
        };
        (0..count)
            .map(|i| {
                Ok(match self {
                    SequenceId::Catalan => catalan(nonneg(i)?),
                    SequenceId::Fibonacci => fibonacci(index(i)),
                    SequenceId::Lucas => lucas(index(i)),
                    SequenceId::Fine => fine(nonneg(i)?).to_integer().expect("integral"),
                    _ => unreachable!(),
                })
            })
            .collect()
    }

    /// Single entry of a triangle.
    pub fn entry(self, row: u32, col: u32) -> Result<BigInt> {
        match self {
            SequenceId::TriangleT => triangle_t(row, col),
            SequenceId::TriangleB => triangle_b(row, col),
            SequenceId::BallotS => ballot_s(row, col),
            _ => Err(Error::Usage(format!("{self} is a one-index sequence"))),
        }
    }

    /// A full row of a triangle, over its valid column range.
    pub fn row(self, row: u32) -> Result<Vec<BigInt>> {
        let cols = match self {
            SequenceId::TriangleB => {
                if row == 0 {
                    return Err(Error::IndexOutOfRange("B rows start at k = 1".into()));
                }
                1..=row
            }
            SequenceId::TriangleT | SequenceId::BallotS => 0..=row,
            _ => return Err(Error::Usage(format!("{self} is a one-index sequence"))),
        };
        cols.map(|c| self.entry(row, c)).collect()
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown sequence {s:?}")))
    }
}
