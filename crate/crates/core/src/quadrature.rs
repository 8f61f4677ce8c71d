//! Floating-point oracle for the exact moment formulas.
//!
//! Integrals over the support `[−2√r, 2√r]` are taken after the substitution
//! `x = 2√r·sin θ`, which turns the `√(4r − x²)` endpoint behaviour into a
//! smooth integrand on `[−π/2, π/2]`. Integration is composite
//! Gauss–Legendre with adaptive bisection: each panel is compared against
//! the sum over its two halves and the worst panel is split until the total
//! estimate meets the tolerance.

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on integrand evaluations per call.
pub const DEFAULT_EVAL_BUDGET: u64 = 10_000_000;

const GL_POINTS: usize = 20;
const INITIAL_PANELS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuadratureResult {
    pub value: f64,
    pub estimated_error: f64,
    pub evaluations: u64,
}

/// Nodes and weights of the `GL_POINTS`-point rule on `[−1, 1]`, found by
/// Newton iteration on the Legendre polynomial.
fn gauss_legendre() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_POINTS;
        let mut rule = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // P_n(x) and P_{n-1}(x) by the three-term recurrence
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
        }
        rule
    })
}

fn gl_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    half * gauss_legendre().iter().map(|&(x, w)| w * f(mid + half * x)).sum::<f64>()
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Adaptive composite Gauss–Legendre on `[a, b]`, stopping when the summed
/// panel error estimate is at most `tol·max(1, |value|)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, budget: u64) -> Result<QuadratureResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter("tolerance must be positive".into()));
    }
    let per_panel = 3 * GL_POINTS as u64;
    let evaluations = Cell::new(0u64);
    let make_panel = |a: f64, b: f64| -> Result<Panel> {
        if evaluations.get() + per_panel > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        evaluations.set(evaluations.get() + per_panel);
        let coarse = gl_panel(&f, a, b);
        let mid = 0.5 * (a + b);
        let fine = gl_panel(&f, a, mid) + gl_panel(&f, mid, b);
        Ok(Panel { a, b, value: fine, error: (fine - coarse).abs() })
    };

    let width = (b - a) / INITIAL_PANELS as f64;
    let mut heap = BinaryHeap::new();
    for i in 0..INITIAL_PANELS {
        let lo = a + i as f64 * width;
        let hi = if i + 1 == INITIAL_PANELS { b } else { lo + width };
        heap.push(make_panel(lo, hi)?);
    }
    loop {
        let value: f64 = heap.iter().map(|p| p.value).sum();
        let error: f64 = heap.iter().map(|p| p.error).sum();
        if error <= tol * value.abs().max(1.0) {
            return Ok(QuadratureResult { value, estimated_error: error, evaluations: evaluations.get() });
        }
        let worst = heap.pop().expect("non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel can no longer be split in floating point
            return Err(Error::BudgetExceeded { budget });
        }
        heap.push(make_panel(worst.a, mid)?);
        heap.push(make_panel(mid, worst.b)?);
    }
}

fn check_params(p: f64, r: f64) -> Result<()> {
    if !(p > 0.0 && r > 0.0 && p <= 2.0 * r) {
        return Err(Error::Parameter(format!("need 0 < p <= 2r, got p={p}, r={r}")));
    }
    Ok(())
}

/// The Kesten density `p/(2π)·√(4r − x²)/(p² − (p − r)x²)` on `|x| ≤ 2√r`.
pub fn kesten_density_at(x: f64, p: f64, r: f64) -> Result<f64> {
    check_params(p, r)?;
    let gap = 4.0 * r - x * x;
    if gap <= 0.0 {
        return Ok(0.0);
    }
    let denom = p * p - (p - r) * x * x;
    if denom <= 0.0 {
        return Err(Error::Internal(format!("density denominator {denom} <= 0 at x={x}")));
    }
    Ok(p / (2.0 * PI) * gap.sqrt() / denom)
}

/// `∫ x^power f(x|p,r) dx` after `x = 2√r sin θ`.
///
/// The substituted integrand is
/// `(2√r sin θ)^power · (p/2π) · 4r cos²θ / ((p − 2r)² + 4r(p − r) cos²θ)`,
/// the denominator being `p² − (p − r)x²` rewritten so that it stays
/// accurate near `θ = ±π/2`. At `p = 2r` the `cos²θ` factors cancel to a
/// bounded integrand.
pub fn power_moment_by_quadrature(power: u32, p: f64, r: f64, tol: f64, budget: u64) -> Result<QuadratureResult> {
    check_params(p, r)?;
    let scale = 2.0 * r.sqrt();
    let lead = (p - 2.0 * r).powi(2);
    let cross = 4.0 * r * (p - r);
    let integrand = move |theta: f64| {
        let (s, c) = theta.sin_cos();
        let c2 = c * c;
        let density = if lead == 0.0 {
            // p = 2r: 4r cos²θ / (4r² cos²θ)
            p / (2.0 * PI) / r
        } else {
            p / (2.0 * PI) * 4.0 * r * c2 / (lead + cross * c2)
        };
        (scale * s).powi(power as i32) * density
    };
    integrate(integrand, -FRAC_PI_2, FRAC_PI_2, tol, budget)
}

/// `M_{2m}(p, r)` by quadrature.
pub fn moment_by_quadrature(m: u32, p: f64, r: f64, tol: f64) -> Result<QuadratureResult> {
    power_moment_by_quadrature(2 * m, p, r, tol, DEFAULT_EVAL_BUDGET)
}

/// `∫_{−2}^{2} x^{2n} (1/2π)√(4 − x²) dx`, which should be `C_n`.
pub fn semicircle_moment_quad(n: u32, tol: f64) -> Result<QuadratureResult> {
    semicircle_moment_quad_with_budget(n, tol, DEFAULT_EVAL_BUDGET)
}

pub fn semicircle_moment_quad_with_budget(n: u32, tol: f64, budget: u64) -> Result<QuadratureResult> {
    let integrand = move |theta: f64| {
        let (s, c) = theta.sin_cos();
        // x = 2 sin θ, √(4 − x²) dx = 4 cos²θ dθ
        (2.0 * s).powi(2 * n as i32) * 4.0 * c * c / (2.0 * PI)
    };
    integrate(integrand, -FRAC_PI_2, FRAC_PI_2, tol, budget)
}

/// Which Catalan generating-function fact [`catalan_gf_check`] sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfMode {
    /// `Σ t^k C_k = 2/(√(1 − 4t) + 1)`, `|t| < 1/4`.
    Generating,
    /// `Σ t^n (1 − t)^n C_n = 1/t`, `1/2 < t < 1.2`.
    SelfConvolution,
}

/// Returns `(partial sum through index N, closed-form target)`.
pub fn catalan_gf_check(t: f64, n_max: u32, mode: GfMode) -> Result<(f64, f64)> {
    let (ratio, target) = match mode {
        GfMode::Generating => {
            if t.is_nan() || t.abs() >= 0.25 {
                return Err(Error::Parameter(format!("generating function needs |t| < 1/4, got {t}")));
            }
            (t, 2.0 / ((1.0 - 4.0 * t).sqrt() + 1.0))
        }
        GfMode::SelfConvolution => {
            if !(t > 0.5 && t < 1.2) {
                return Err(Error::Parameter(format!("self-convolution needs 1/2 < t < 1.2, got {t}")));
            }
            (t * (1.0 - t), 1.0 / t)
        }
    };
    // term_n = ratio^n C_n, advanced by C_{n+1}/C_n = 2(2n+1)/(n+2)
    let mut term = 1.0;
    let mut sum = 0.0;
    for n in 0..=n_max {
        sum += term;
        term *= ratio * 2.0 * (2 * n + 1) as f64 / (n + 2) as f64;
    }
    Ok((sum, target))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_rule_is_exact_on_polynomials() {
        let weights: f64 = gauss_legendre().iter().map(|&(_, w)| w).sum();
        assert!((weights - 2.0).abs() < 1e-14);
        // ∫ x^38 over [-1,1] = 2/39
        let v = gl_panel(&|x: f64| x.powi(38), -1.0, 1.0);
        assert!((v - 2.0 / 39.0).abs() < 1e-14);
    }

    #[test]
    fn density_examples() {
        assert_eq!(kesten_density_at(2.0, 1.0, 1.0).unwrap(), 0.0);
        assert!((kesten_density_at(0.0, 1.0, 1.0).unwrap() - 1.0 / PI).abs() < 1e-15);
        assert_eq!(kesten_density_at(3.0, 1.0, 1.0).unwrap(), 0.0);
        // p = 2r endpoint: 0/0 avoided by the support check
        assert_eq!(kesten_density_at(2.0 * 2f64.sqrt(), 4.0, 2.0).unwrap(), 0.0);
        assert!(kesten_density_at(0.0, 3.0, 1.0).is_err());
        assert!(kesten_density_at(0.0, 0.0, 1.0).is_err());
        assert!(kesten_density_at(0.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn quadrature_examples() {
        let tol = 1e-12;
        let m0 = moment_by_quadrature(0, 1.5, 1.0, tol).unwrap();
        assert!((m0.value - 1.0).abs() < 1e-10);
        assert!(m0.evaluations > 0 && m0.estimated_error >= 0.0);
        assert!((moment_by_quadrature(1, 1.5, 1.0, tol).unwrap().value - 1.5).abs() < 1e-10);
        assert!((moment_by_quadrature(2, 1.0, 1.0, tol).unwrap().value - 2.0).abs() < 1e-10);
    }

    #[test]
    fn arcsine_edge() {
        // p = 2r: density 1/(π√(4r − x²)), even moments r^m·binom(2m, m)
        let v = moment_by_quadrature(3, 2.0, 1.0, 1e-12).unwrap();
        assert!((v.value - 20.0).abs() < 1e-9, "{}", v.value);
    }

    #[test]
    fn direct_density_integrates_consistently() {
        // cross-check the substituted integrand against the raw density on
        // an interior interval where both are smooth
        let (p, r) = (1.3, 1.0);
        let raw = integrate(|x| kesten_density_at(x, p, r).unwrap(), -1.0, 1.0, 1e-12, DEFAULT_EVAL_BUDGET).unwrap();
        let theta = (0.5f64).asin();
        let lead = (p - 2.0 * r).powi(2);
        let cross = 4.0 * r * (p - r);
        let sub = integrate(
            |t: f64| {
                let c2 = t.cos().powi(2);
                p / (2.0 * PI) * 4.0 * r * c2 / (lead + cross * c2)
            },
            -theta,
            theta,
            1e-12,
            DEFAULT_EVAL_BUDGET,
        )
        .unwrap();
        assert!((raw.value - sub.value).abs() < 1e-12);
    }

    #[test]
    fn semicircle_examples() {
        assert!((semicircle_moment_quad(0, 1e-12).unwrap().value - 1.0).abs() < 1e-10);
        assert!((semicircle_moment_quad(3, 1e-12).unwrap().value - 5.0).abs() < 1e-9);
        assert!((semicircle_moment_quad(6, 1e-12).unwrap().value - 132.0).abs() < 132.0 * 1e-10);
    }

    #[test]
    fn budget_is_enforced() {
        let err = semicircle_moment_quad_with_budget(3, 1e-12, 10).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { budget: 10 });
        assert!(integrate(|x| x, 0.0, 1.0, 0.0, 1000).is_err());
    }

    #[test]
    fn odd_moments_vanish() {
        for m in 0..=3 {
            let v = power_moment_by_quadrature(2 * m + 1, 1.3, 1.0, 1e-12, DEFAULT_EVAL_BUDGET).unwrap();
            assert!(v.value.abs() < 1e-10, "m={m}: {}", v.value);
        }
    }

    #[test]
    fn generating_function_examples() {
        assert_eq!(catalan_gf_check(0.0, 10, GfMode::Generating).unwrap(), (1.0, 1.0));
        let (s, target) = catalan_gf_check(0.2, 60, GfMode::Generating).unwrap();
        assert!((target - 1.381_966_011_250_105).abs() < 1e-12);
        assert!((s - target).abs() < 1e-8);
        assert_eq!(catalan_gf_check(1.0, 25, GfMode::SelfConvolution).unwrap(), (1.0, 1.0));
        assert!(catalan_gf_check(0.25, 10, GfMode::Generating).is_err());
        assert!(catalan_gf_check(0.5, 10, GfMode::SelfConvolution).is_err());
        assert!(catalan_gf_check(1.2, 10, GfMode::SelfConvolution).is_err());
    }

    #[test]
    fn self_convolution_partial_sums_increase() {
        for t in [0.55, 0.7, 0.85, 0.95] {
            let mut prev = f64::NEG_INFINITY;
            for n in 0..200 {
                let (s, target) = catalan_gf_check(t, n, GfMode::SelfConvolution).unwrap();
                // terms are positive but fall below f64 resolution for large n
                assert!(s >= prev);
                assert!(s <= target + 1e-12);
                prev = s;
            }
            let (s, target) = catalan_gf_check(t, 2000, GfMode::SelfConvolution).unwrap();
            assert!((s - target).abs() < 1e-6, "t={t}: {s} vs {target}");
        }
    }
}
