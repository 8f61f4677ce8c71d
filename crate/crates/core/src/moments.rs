//! Even moments `M_{2m}(p, r)` of the Kesten density
//!
//! ```text
//! f(x | p, r) = p/(2π) · √(4r − x²) / (p² − (p − r)x²),   |x| ≤ 2√r,  0 < p ≤ 2r,
//! ```
//!
//! by six exact routes, and the four polynomial forms in `t = r/p` whose
//! pairwise equality they imply.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::polynomials::Polynomial;
use crate::sequences::{ballot_s, binomial, catalan, catalan_prefix, triangle_b, triangle_t};

/// Where `t = r/p` sits relative to the window `|t(1 − t)| ≤ 1/4`,
/// `t ≥ 1/2` in which the term-by-term expansion of the density is valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `p = r`, the scaled semicircle.
    Equal,
    /// `4|t − t²| < 1`.
    SeriesInterior,
    /// `4|t − t²| = 1`; with `t ≥ 1/2` this is exactly `p = 2r`.
    SeriesBoundary,
    Outside,
}

/// A validated parameter pair with its derived regime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KestenParams {
    p: Rational,
    r: Rational,
    t: Rational,
    regime: Regime,
}

impl KestenParams {
    /// Classifies `(p, r)` by comparing `4|t − t²|` with 1 exactly.
    ///
    /// `t < 1/2` (that is, `p > 2r`) is not a density and is reported as
    /// [`Regime::Outside`] even though `4|t − t²| < 1` there.
    pub fn classify(p: Rational, r: Rational) -> Result<Self> {
        if !p.is_positive() || !r.is_positive() {
            return Err(Error::Parameter(format!("p and r must be positive, got p={p}, r={r}")));
        }
        let t = &r / &p;
        let regime = if p == r {
            Regime::Equal
        } else {
            let four_gap = Rational::from(4) * (&t - &t * &t).abs();
            let half = Rational::new(1, 2).expect("nonzero");
            if t < half || four_gap > Rational::one() {
                Regime::Outside
            } else if four_gap == Rational::one() {
                Regime::SeriesBoundary
            } else {
                Regime::SeriesInterior
            }
        };
        Ok(KestenParams { p, r, t, regime })
    }

    pub fn from_ints(p: i64, r: i64) -> Result<Self> {
        Self::classify(Rational::from(p), Rational::from(r))
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    /// `t = r/p`.
    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// `0 < p ≤ 2r`.
    pub fn is_density(&self) -> bool {
        self.p <= Rational::from(2) * &self.r
    }

    fn one_minus_t(&self) -> Rational {
        Rational::one() - &self.t
    }
}

/// How a moment was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MomentMethod {
    Closed,
    Series,
    #[serde(rename = "sform")]
    SForm,
    #[serde(rename = "tform")]
    TForm,
    #[serde(rename = "bform")]
    BForm,
    Comment1,
    #[serde(rename = "quad")]
    Quadrature,
}

impl MomentMethod {
    pub const ALL: [MomentMethod; 7] = [
        MomentMethod::Closed,
        MomentMethod::Series,
        MomentMethod::SForm,
        MomentMethod::TForm,
        MomentMethod::BForm,
        MomentMethod::Comment1,
        MomentMethod::Quadrature,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MomentMethod::Closed => "closed",
            MomentMethod::Series => "series",
            MomentMethod::SForm => "sform",
            MomentMethod::TForm => "tform",
            MomentMethod::BForm => "bform",
            MomentMethod::Comment1 => "comment1",
            MomentMethod::Quadrature => "quad",
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, MomentMethod::Series | MomentMethod::Quadrature)
    }
}

impl fmt::Display for MomentMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MomentMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "quadrature" {
            return Ok(MomentMethod::Quadrature);
        }
        MomentMethod::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown moment method {s:?}")))
    }
}

/// `M_{2m}` computed by one method. `bound` is set only for
/// [`MomentMethod::Series`] and caps `|value − M_{2m}|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentValue {
    pub m: u32,
    pub method: MomentMethod,
    pub value: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<Rational>,
}

impl MomentValue {
    fn exact(m: u32, method: MomentMethod, value: Rational) -> Self {
        MomentValue { m, method, value, bound: None }
    }
}

fn big(n: BigInt) -> Rational {
    Rational::from(n)
}

fn require_positive_m(m: u32, what: &str) -> Result<()> {
    if m == 0 {
        Err(Error::Usage(format!("{what} starts at m = 1 (M_0 = 1 by normalization)")))
    } else {
        Ok(())
    }
}

/// `p^m/(1 − t)^m · (1 − Σ_{k<m} t^{k+1}(1 − t)^k C_k)`, or `r^m C_m` when
/// `p = r`.
pub fn moment_closed(m: u32, params: &KestenParams) -> Result<MomentValue> {
    let value = match params.regime {
        Regime::Outside => {
            return Err(Error::Domain(format!("closed form needs 2(√2−1)r <= p <= 2r; t = {} is outside", params.t)))
        }
        Regime::Equal => params.r.powu(m) * big(catalan(m)),
        Regime::SeriesInterior | Regime::SeriesBoundary => {
            let t = &params.t;
            let u = params.one_minus_t();
            let tu = t * &u;
            let mut power = t.clone(); // t^{k+1}(1−t)^k
            let mut bracket = Rational::one();
            for c in catalan_prefix(m as usize) {
                bracket -= &(&power * big(c));
                power *= &tu;
            }
            params.p.powu(m) * bracket / u.powu(m)
        }
    };
    Ok(MomentValue::exact(m, MomentMethod::Closed, value))
}

/// Number of binary digits kept in a series value: the value is floored to
/// a multiple of `2^{−K}` with `2^{−K} <= tol · 2^{−30}`.
fn grid_bits(tol: &Rational) -> usize {
    (tol.denom().bits() as i64 - tol.numer().bits() as i64 + 32).max(32) as usize
}

/// Tail bounds for the series and the cutoff search.
struct SeriesTail {
    /// `t r^m 4^m / (1 − 4q)`
    prefactor: Rational,
    /// `4q = 4|t(1 − t)|`
    four_q: Rational,
    grid: usize,
}

impl SeriesTail {
    fn new(params: &KestenParams, m: u32, tol: &Rational) -> Self {
        let four_q = Rational::from(4) * (params.t.clone() * params.one_minus_t()).abs();
        let prefactor = &params.t * params.r.powu(m) * Rational::from(4).powu(m) / (Rational::one() - &four_q);
        SeriesTail { prefactor, four_q, grid: grid_bits(tol) }
    }

    /// Tail bound after `n + 1` terms rounded up to the `2^{−K}` grid, plus
    /// `2^{−K}` for flooring the partial sum. Computed on integers to avoid
    /// reducing very large fractions.
    fn certified(&self, n: u64) -> Rational {
        let e = u32::try_from(n + 1).expect("cutoff fits in u32");
        let num = (self.prefactor.numer() * Pow::pow(self.four_q.numer(), e)) << self.grid;
        let den = self.prefactor.denom() * Pow::pow(self.four_q.denom(), e);
        let ceil = num.div_ceil(&den);
        Rational::new(ceil + 1, BigInt::one() << self.grid).expect("nonzero")
    }
}

/// Smallest `N` whose certified bound (see [`SeriesTail::certified`]) is
/// below `tol`, together with that bound. `N = 0` with bound zero when
/// `t(1 − t) = 0`, where the series is a single exact term.
fn series_cutoff(params: &KestenParams, m: u32, tol: &Rational) -> (u64, Rational) {
    let tail = SeriesTail::new(params, m, tol);
    if tail.four_q.is_zero() {
        return (0, Rational::zero());
    }
    // float estimate, then settle exactly
    let ratio = tail.four_q.to_f64();
    let estimate = ((tol.to_f64() / tail.prefactor.to_f64()).ln() / ratio.ln() - 1.0).floor();
    let mut n = if estimate.is_finite() && estimate > 2.0 { estimate as u64 - 2 } else { 0 };
    while n > 0 && tail.certified(n - 1) < *tol {
        n -= 1;
    }
    loop {
        let bound = tail.certified(n);
        if bound < *tol {
            return (n, bound);
        }
        n += 1;
    }
}

/// `(P, Q, T)` over `[lo, hi)` with `T/Q = Σ_{k∈[lo,hi)} Π_{j=lo}^{k−1} num(j)/den(j)`
/// and `P = Π num`, `Q = Π den`.
fn split_sum(lo: u64, hi: u64, num: &dyn Fn(u64) -> BigInt, den: &dyn Fn(u64) -> BigInt) -> (BigInt, BigInt, BigInt) {
    if hi - lo == 1 {
        let q = den(lo);
        return (num(lo), q.clone(), q);
    }
    let mid = lo + (hi - lo) / 2;
    let (p1, q1, t1) = split_sum(lo, mid, num, den);
    let (p2, q2, t2) = split_sum(mid, hi, num, den);
    (&p1 * p2, &q1 * &q2, t1 * q2 + p1 * t2)
}

/// Partial sum of `(r/p) Σ_k ((p − r)/p²)^k r^{k+m} C_{k+m}`.
///
/// Each term equals `t r^m (t(1 − t))^k C_{k+m}`. Using `C_n ≤ 4^n` the tail
/// after `N` terms is at most `t r^m 4^m (4q)^{N+1}/(1 − 4q)`. The exact
/// partial sum is floored to a multiple of `2^{−K}` (`2^{−K} <= tol·2^{−30}`)
/// to keep the result small; `N` is the first cutoff for which the tail bound
/// plus that rounding is below `tol`, and that total is returned in
/// [`MomentValue::bound`].
pub fn moment_series(m: u32, params: &KestenParams, tol: &Rational) -> Result<MomentValue> {
    if !tol.is_positive() {
        return Err(Error::Parameter("tolerance must be positive".into()));
    }
    match params.regime {
        Regime::SeriesInterior | Regime::Equal => {}
        Regime::SeriesBoundary => return Err(Error::BoundaryConvergence),
        Regime::Outside => return Err(Error::Domain(format!("series diverges or is invalid at t = {}", params.t))),
    }
    let (cutoff, bound) = series_cutoff(params, m, tol);

    // With t = a/b, w = a(b − a), the k-th term over the first is
    // Π_{j<k} w·2(2(m+j)+1) / (b²(m+j+2)): a hypergeometric sum, evaluated
    // by binary splitting.
    let a = params.t.numer().clone();
    let b = params.t.denom().clone();
    let w = &a * (&b - &a);
    let b2 = &b * &b;
    let num = |j: u64| &w * BigInt::from(2 * (2 * (m as u64 + j) + 1));
    let den = |j: u64| &b2 * BigInt::from(m as u64 + j + 2);
    let (_, q_total, t_total) = split_sum(0, cutoff + 1, &num, &den);
    // value = (a/b) (r_n/r_d)^m C_m T/Q
    let numer = a * Pow::pow(params.r.numer(), m) * catalan(m) * t_total;
    let denom = b * Pow::pow(params.r.denom(), m) * q_total;
    let value = if bound.is_zero() {
        Rational::new(numer, denom).expect("nonzero")
    } else {
        let grid = grid_bits(tol);
        Rational::new((numer << grid).div_floor(&denom), BigInt::one() << grid).expect("nonzero")
    };
    Ok(MomentValue { m, method: MomentMethod::Series, value, bound: Some(bound) })
}

/// `p^m Σ_{k=0}^{m} t^k (1 − t)^{m−k} S_{m,k}`. Polynomial in `t`; no window.
pub fn moment_sform(m: u32, params: &KestenParams) -> Result<MomentValue> {
    let t = &params.t;
    let u = params.one_minus_t();
    let sum: Rational = (0..=m).map(|k| t.powu(k) * u.powu(m - k) * big(ballot_s(m, k).expect("k <= m"))).sum();
    Ok(MomentValue::exact(m, MomentMethod::SForm, params.p.powu(m) * sum))
}

/// `p Σ_{j=0}^{m−1} p^{m−1−j} r^j T_{m−1,j}`, `m ≥ 1`.
pub fn moment_tform(m: u32, params: &KestenParams) -> Result<MomentValue> {
    require_positive_m(m, "T-form")?;
    let (p, r) = (&params.p, &params.r);
    let sum: Rational =
        (0..m).map(|j| p.powu(m - 1 - j) * r.powu(j) * big(triangle_t(m - 1, j).expect("j <= m-1"))).sum();
    Ok(MomentValue::exact(m, MomentMethod::TForm, p * sum))
}

/// `p Σ_{j=0}^{m−1} (p − r)^j r^{m−1−j} B_{m,j+1}`, `m ≥ 1`.
pub fn moment_bform(m: u32, params: &KestenParams) -> Result<MomentValue> {
    require_positive_m(m, "B-form")?;
    let (p, r) = (&params.p, &params.r);
    let diff = p - r;
    let sum: Rational =
        (0..m).map(|j| diff.powu(j) * r.powu(m - 1 - j) * big(triangle_b(m, j + 1).expect("1 <= j+1 <= m"))).sum();
    Ok(MomentValue::exact(m, MomentMethod::BForm, p * sum))
}

/// `p/(p − r) · (p^{2m−1}/(p − r)^{m−1} − Σ_{j=1}^{m} binom(2j−1, j)/j · r^j
/// p^{2(m−j)}/(p − r)^{m−j})`, for `m ≥ 1` and `p ≠ r`.
pub fn moment_comment1(m: u32, params: &KestenParams) -> Result<MomentValue> {
    require_positive_m(m, "comment1")?;
    if params.p == params.r {
        return Err(Error::DegenerateDenominator);
    }
    let (p, r) = (&params.p, &params.r);
    let diff = p - r;
    let mut inner = p.powu(2 * m - 1) / diff.powu(m - 1);
    for j in 1..=m {
        let coef = Rational::new(binomial(2 * j - 1, j as i64), 2 * j - 1).expect("nonzero");
        inner -= &(coef * r.powu(j) * p.powu(2 * (m - j)) / diff.powu(m - j));
    }
    Ok(MomentValue::exact(m, MomentMethod::Comment1, p / &diff * inner))
}

/// Default truncation tolerance for [`moment_series`] when called through
/// [`moment_exact`].
pub fn default_series_tol() -> Rational {
    Rational::new(1, 1_000_000_000_000i64).expect("nonzero")
}

/// Dispatch on an exact method (plus `series` at [`default_series_tol`]).
pub fn moment_by(method: MomentMethod, m: u32, params: &KestenParams) -> Result<MomentValue> {
    match method {
        MomentMethod::Closed => moment_closed(m, params),
        MomentMethod::Series => moment_series(m, params, &default_series_tol()),
        MomentMethod::SForm => moment_sform(m, params),
        MomentMethod::TForm => moment_tform(m, params),
        MomentMethod::BForm => moment_bform(m, params),
        MomentMethod::Comment1 => moment_comment1(m, params),
        MomentMethod::Quadrature => {
            Err(Error::Usage("quadrature is a floating-point method; see the quadrature module".into()))
        }
    }
}

/// The four polynomials in `t` that `(1 − t)^m M_{2m}/p^m` equals.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyForms {
    /// `(1−t)^m Σ_{k=0}^{m} S_{m,k} t^k (1−t)^{m−k}`
    pub s_form: Polynomial<Rational>,
    /// `(1−t)^m Σ_{k=0}^{m−1} T_{m−1,k} t^k`
    pub t_form: Polynomial<Rational>,
    /// `(1−t)^m Σ_{k=0}^{m−1} B_{m,k+1} (1−t)^k t^{m−1−k}`
    pub b_form: Polynomial<Rational>,
    /// `1 − Σ_{k=0}^{m−1} C_k t^{k+1} (1−t)^k`
    pub catalan_form: Polynomial<Rational>,
}

impl PolyForms {
    pub fn as_array(&self) -> [&Polynomial<Rational>; 4] {
        [&self.s_form, &self.t_form, &self.b_form, &self.catalan_form]
    }
}

fn int_poly(n: BigInt) -> Polynomial<Rational> {
    Polynomial::constant(Rational::from(n))
}

/// Builds the four forms for `m ≥ 1`.
pub fn moment_poly_forms(m: u32) -> Result<PolyForms> {
    require_positive_m(m, "polynomial forms")?;
    let t = Polynomial::x();
    let u = Polynomial::linear(1, -1);
    let u_pow: Vec<_> = (0..=m).map(|k| u.pow(k)).collect();
    let t_pow: Vec<_> = (0..=m).map(|k| t.pow(k)).collect();
    let lead = &u_pow[m as usize];

    let mut s_sum = Polynomial::zero();
    for k in 0..=m {
        let term = &(&t_pow[k as usize] * &u_pow[(m - k) as usize]) * &int_poly(ballot_s(m, k)?);
        s_sum = &s_sum + &term;
    }
    let mut t_sum = Polynomial::zero();
    let mut b_sum = Polynomial::zero();
    for k in 0..m {
        t_sum = &t_sum + &(&t_pow[k as usize] * &int_poly(triangle_t(m - 1, k)?));
        let tb = &u_pow[k as usize] * &t_pow[(m - 1 - k) as usize];
        b_sum = &b_sum + &(&tb * &int_poly(triangle_b(m, k + 1)?));
    }
    let mut catalan_form = Polynomial::one();
    for (k, c) in catalan_prefix(m as usize).into_iter().enumerate() {
        let term = &(&t_pow[k + 1] * &u_pow[k]) * &int_poly(c);
        catalan_form = &catalan_form - &term;
    }
    Ok(PolyForms { s_form: lead * &s_sum, t_form: lead * &t_sum, b_form: lead * &b_sum, catalan_form })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn params(p: i64, r: i64) -> KestenParams {
        KestenParams::from_ints(p, r).unwrap()
    }

    #[test]
    fn classification() {
        assert_eq!(params(1, 1).regime(), Regime::Equal);
        assert_eq!(params(3, 2).regime(), Regime::SeriesInterior);
        assert_eq!(params(2, 1).regime(), Regime::SeriesBoundary);
        // p = r/2: t = 2, 4|2 − 4| = 8
        assert_eq!(params(1, 2).regime(), Regime::Outside);
        // p > 2r is not a density
        assert_eq!(params(3, 1).regime(), Regime::Outside);
        assert!(!params(3, 1).is_density());
        // just inside 2(√2−1) ≈ 0.8284
        let inside = KestenParams::classify(q(83, 100), Rational::one()).unwrap();
        assert_eq!(inside.regime(), Regime::SeriesInterior);
        let outside = KestenParams::classify(q(82, 100), Rational::one()).unwrap();
        assert_eq!(outside.regime(), Regime::Outside);
        assert!(matches!(KestenParams::from_ints(0, 1), Err(Error::Parameter(_))));
        assert!(matches!(KestenParams::from_ints(1, -1), Err(Error::Parameter(_))));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(moment_closed(1, &params(3, 2)).unwrap().value, Rational::from(3));
        assert_eq!(moment_closed(2, &params(3, 2)).unwrap().value, Rational::from(15));
        assert_eq!(moment_closed(3, &params(2, 2)).unwrap().value, Rational::from(40));
        assert_eq!(moment_closed(0, &params(3, 2)).unwrap().value, Rational::one());
        assert!(matches!(moment_closed(2, &params(1, 2)), Err(Error::Domain(_))));
        // boundary p = 2r is allowed
        assert_eq!(moment_closed(2, &params(2, 1)).unwrap().value, Rational::from(6));
    }

    #[test]
    fn series_examples() {
        let tol = q(1, 1_000_000_000);
        let v = moment_series(2, &params(2, 2), &tol).unwrap();
        assert_eq!(v.value, Rational::from(8));
        assert_eq!(v.bound, Some(Rational::zero()));

        let v = moment_series(1, &params(3, 2), &tol).unwrap();
        let bound = v.bound.clone().unwrap();
        assert!(bound < tol);
        assert!((v.value - Rational::from(3)).abs() <= bound);

        let tol6 = q(1, 1_000_000);
        let v = moment_series(0, &params(3, 2), &tol6).unwrap();
        assert!((v.value - Rational::one()).abs() <= tol6);

        assert_eq!(moment_series(1, &params(2, 1), &tol), Err(Error::BoundaryConvergence));
        assert!(matches!(moment_series(1, &params(1, 2), &tol), Err(Error::Domain(_))));
        assert!(matches!(moment_series(1, &params(3, 2), &Rational::zero()), Err(Error::Parameter(_))));
    }

    #[test]
    fn series_cutoff_is_minimal() {
        let p = params(3, 2);
        let tol = q(1, 1_000_000_000_000);
        let (n, bound) = series_cutoff(&p, 4, &tol);
        assert!(bound < tol);
        let (n_loose, _) = series_cutoff(&p, 4, &q(1, 1_000));
        assert!(n_loose < n);
        // one fewer term would not be certified
        assert!(SeriesTail::new(&p, 4, &tol).certified(n - 1) >= tol);
    }

    #[test]
    fn series_converges_toward_the_closed_form() {
        let p = KestenParams::classify(q(5, 4), Rational::one()).unwrap();
        let exact = moment_closed(3, &p).unwrap().value;
        let mut last = None;
        for exp in [3, 6, 9, 12] {
            let tol = Rational::new(1, num_traits::pow(BigInt::from(10), exp)).unwrap();
            let v = moment_series(3, &p, &tol).unwrap();
            let err = (v.value - &exact).abs();
            assert!(err <= v.bound.unwrap());
            if let Some(prev) = last {
                assert!(err <= prev);
            }
            last = Some(err);
        }
    }

    #[test]
    fn sform_examples() {
        assert_eq!(moment_sform(1, &params(3, 2)).unwrap().value, Rational::from(3));
        assert_eq!(moment_sform(2, &params(3, 2)).unwrap().value, Rational::from(15));
        assert_eq!(moment_sform(2, &params(5, 5)).unwrap().value, Rational::from(50));
        assert_eq!(moment_sform(0, &params(1, 3)).unwrap().value, Rational::one());
    }

    #[test]
    fn tform_examples() {
        assert_eq!(moment_tform(1, &params(3, 2)).unwrap().value, Rational::from(3));
        assert_eq!(moment_tform(2, &params(3, 2)).unwrap().value, Rational::from(15));
        assert_eq!(moment_tform(3, &params(1, 1)).unwrap().value, Rational::from(5));
        assert!(matches!(moment_tform(0, &params(1, 1)), Err(Error::Usage(_))));
    }

    #[test]
    fn bform_examples() {
        assert_eq!(moment_bform(1, &params(3, 2)).unwrap().value, Rational::from(3));
        assert_eq!(moment_bform(2, &params(3, 2)).unwrap().value, Rational::from(15));
        assert_eq!(moment_bform(2, &params(2, 2)).unwrap().value, Rational::from(8));
        assert!(matches!(moment_bform(0, &params(1, 1)), Err(Error::Usage(_))));
    }

    #[test]
    fn comment1_examples() {
        assert_eq!(moment_comment1(1, &params(3, 2)).unwrap().value, Rational::from(3));
        assert_eq!(moment_comment1(2, &params(3, 2)).unwrap().value, Rational::from(15));
        assert_eq!(moment_comment1(3, &params(5, 2)).unwrap().value, moment_sform(3, &params(5, 2)).unwrap().value);
        assert_eq!(moment_comment1(2, &params(2, 2)), Err(Error::DegenerateDenominator));
        assert!(matches!(moment_comment1(0, &params(3, 2)), Err(Error::Usage(_))));
    }

    #[test]
    fn comment1_coefficient_must_be_divided_by_2m_minus_1() {
        // With binom(2j−1, j)/j in place of binom(2j−1, j)/(2j−1) the
        // formula gives 9 instead of 15 at m = 2, (p, r) = (3, 2).
        let (p, r) = (Rational::from(3), Rational::from(2));
        let diff = &p - &r;
        let mut inner = p.powu(3) / diff.powu(1);
        for j in 1..=2u32 {
            let coef = Rational::new(binomial(2 * j - 1, j as i64), j).unwrap();
            inner -= &(coef * r.powu(j) * p.powu(2 * (2 - j)) / diff.powu(2 - j));
        }
        assert_eq!(&p / &diff * inner, Rational::from(9));
        for j in 1..=20u32 {
            let coef = Rational::new(binomial(2 * j - 1, j as i64), 2 * j - 1).unwrap();
            assert_eq!(coef, Rational::from(catalan(j - 1)));
        }
    }

    #[test]
    fn poly_forms_small_cases() {
        let f1 = moment_poly_forms(1).unwrap();
        for form in f1.as_array() {
            assert_eq!(*form, Polynomial::from_ints(&[1, -1]));
        }
        let f2 = moment_poly_forms(2).unwrap();
        for form in f2.as_array() {
            assert_eq!(*form, Polynomial::from_ints(&[1, -1, -1, 1]));
        }
        for m in 1..=8 {
            for form in moment_poly_forms(m).unwrap().as_array() {
                assert!(form.degree().unwrap() <= 2 * m as usize);
            }
        }
        assert!(moment_poly_forms(0).is_err());
    }

    #[test]
    fn method_names_roundtrip() {
        for method in MomentMethod::ALL {
            assert_eq!(method.as_str().parse::<MomentMethod>().unwrap(), method);
            let json = serde_json::to_string(&method).unwrap();
            assert_eq!(json, format!("\"{}\"", method.as_str()));
        }
        assert_eq!("quadrature".parse::<MomentMethod>().unwrap(), MomentMethod::Quadrature);
        assert!("simpson".parse::<MomentMethod>().is_err());
    }

    #[test]
    fn moment_value_json() {
        let v = moment_closed(2, &params(3, 2)).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"m":2,"method":"closed","value":"15/1"}"#);
    }
}
