//! Chain builders, one per registered identity. Each returns the chains for
//! a single index value; all sides of a chain must be equal.

use super::{Chain, SideValue};
use crate::exact::{QuadAlgebra, QuadElement, Rational};
use crate::moments::moment_poly_forms;
use crate::polynomials::Polynomial;
use crate::sequences::{ballot_s, catalan, fibonacci, fine as fine_number, lucas, triangle_b, triangle_t};

fn cat(n: u32) -> Rational {
    Rational::from(catalan(n))
}

fn s(m: u32, k: u32) -> Rational {
    Rational::from(ballot_s(m, k).expect("k <= m"))
}

fn t(m: u32, j: u32) -> Rational {
    Rational::from(triangle_t(m, j).expect("j <= m"))
}

fn b(k: u32, j: u32) -> Rational {
    Rational::from(triangle_b(k, j).expect("1 <= j <= k"))
}

fn fib(n: i64) -> Rational {
    Rational::from(fibonacci(n))
}

fn luc(n: i64) -> Rational {
    Rational::from(lucas(n))
}

/// `(−1)^e`.
fn sign(e: i64) -> Rational {
    Rational::from(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `base^e` for a possibly negative exponent and nonzero base.
fn ipow(base: i64, e: i64) -> Rational {
    Rational::from(base).pow(e as i32).expect("nonzero base")
}

fn sum<F: Fn(u32) -> Rational>(range: impl Iterator<Item = u32>, f: F) -> Rational {
    range.map(f).sum()
}

fn poly_const(r: Rational) -> Polynomial<Rational> {
    Polynomial::constant(r)
}

pub(super) fn prop1i(m: u32) -> Vec<Chain> {
    let forms = moment_poly_forms(m).expect("m >= 1");
    vec![Chain::new("forms")
        .side("S", SideValue::Poly(forms.s_form))
        .side("T", SideValue::Poly(forms.t_form))
        .side("B", SideValue::Poly(forms.b_form))
        .side("C", SideValue::Poly(forms.catalan_form))]
}

/// The four x-forms: `Σ S x^k`, `(x+1) Σ B x^{m−1−k}`,
/// `Σ T x^k (x+1)^{m−k}` and `(1+x)^{2m} − Σ C_k x^{k+1}(x+1)^{2m−2k−1}`.
pub(super) fn x_forms(m: u32) -> [Polynomial<Rational>; 4] {
    let x = Polynomial::x();
    let x1 = Polynomial::linear(1, 1);
    let mut s_form = Polynomial::zero();
    for k in 0..=m {
        s_form = &s_form + &(&x.pow(k) * &poly_const(s(m, k)));
    }
    let mut b_inner = Polynomial::zero();
    let mut t_form = Polynomial::zero();
    let mut c_form = x1.pow(2 * m);
    for k in 0..m {
        b_inner = &b_inner + &(&x.pow(m - 1 - k) * &poly_const(b(m, k + 1)));
        t_form = &t_form + &(&(&x.pow(k) * &x1.pow(m - k)) * &poly_const(t(m - 1, k)));
        c_form = &c_form - &(&(&x.pow(k + 1) * &x1.pow(2 * m - 2 * k - 1)) * &poly_const(cat(k)));
    }
    [s_form, &x1 * &b_inner, t_form, c_form]
}

pub(super) fn prop1ii(m: u32) -> Vec<Chain> {
    let [s_form, b_form, t_form, c_form] = x_forms(m);
    vec![Chain::new("x-forms")
        .side("S", SideValue::Poly(s_form))
        .side("B", SideValue::Poly(b_form))
        .side("T", SideValue::Poly(t_form))
        .side("C", SideValue::Poly(c_form))]
}

pub(super) fn ex1a(m: u32) -> Vec<Chain> {
    let mi = m as i64;
    let c_side = Rational::one() - Rational::from(2) * sum(0..m, |k| ipow(-2, k as i64) * cat(k));
    let s_side = sum(0..=m, |k| ipow(-2, k as i64) * s(m, k));
    let b_side = -sum(0..m, |k| ipow(-2, mi - 1 - k as i64) * b(m, k + 1));
    let t_side = sign(mi) * sum(0..m, |k| ipow(2, k as i64) * t(m - 1, k));
    vec![Chain::new("t=2").num("C", c_side).num("S", s_side).num("B", b_side).num("T", t_side)]
}

pub(super) fn ex1b(m: u32) -> Vec<Chain> {
    let alg = QuadAlgebra::zeta6();
    let omega = QuadElement::theta(&alg);
    let omega_bar = QuadElement::one(&alg).sub(&omega).expect("same algebra");
    let forms = moment_poly_forms(m).expect("m >= 1");
    let q = |r: Rational| QuadElement::from_rational(&alg, r);
    let qsum = |range: std::ops::Range<u32>, f: &dyn Fn(u32) -> QuadElement| {
        range.fold(QuadElement::zero(&alg), |acc, k| acc.add(&f(k)).expect("same algebra"))
    };
    let mul = |a: &QuadElement, b: &QuadElement| a.mul(b).expect("same algebra");

    // the displayed specialization, with e^{−iπ/3} = 1 − ω
    let catalan_total = sum(0..m, cat);
    let d_c = q(Rational::one()).sub(&omega.scale(&catalan_total)).expect("same algebra");
    let d_t = mul(&omega_bar.pow(m as u64), &qsum(0..m, &|k| omega.pow(k as u64).scale(&t(m - 1, k))));
    let d_s = mul(&omega_bar.pow(2 * m as u64), &qsum(0..m + 1, &|k| omega.pow(2 * k as u64).scale(&s(m, k))));
    let d_b =
        mul(&omega_bar.pow(2 * m as u64 - 1), &qsum(0..m, &|k| omega.pow(2 * (m - 1 - k) as u64).scale(&b(m, k + 1))));

    let raw = Chain::new("raw")
        .side("S-form(ω)", SideValue::Quad(forms.s_form.eval_quad(&omega)))
        .side("T-form(ω)", SideValue::Quad(forms.t_form.eval_quad(&omega)))
        .side("B-form(ω)", SideValue::Quad(forms.b_form.eval_quad(&omega)))
        .side("C-form(ω)", SideValue::Quad(forms.catalan_form.eval_quad(&omega)))
        .side("1-ωΣC", SideValue::Quad(d_c))
        .side("ω̄^m ΣT ω^k", SideValue::Quad(d_t))
        .side("ω̄^2m ΣS ω^2k", SideValue::Quad(d_s))
        .side("ω̄^(2m-1) ΣB ω^2(m-1-k)", SideValue::Quad(d_b));

    // cos(jπ/3) and (2√3/3)·sin(jπ/3) as the two coordinates of ω^j
    let parts = |j: u32| omega.pow(j as u64).zeta6_parts().expect("zeta6 element");
    let re = |j: u32| parts(j).0;
    let im = |j: u32| parts(j).1;
    let half = Rational::new(1, 2).expect("nonzero");

    let real = Chain::new("real")
        .num("1-ΣC/2", Rational::one() - &half * &catalan_total)
        .num("Σcos((m-k)π/3)T", sum(0..m, |k| re(m - k) * t(m - 1, k)))
        .num("Σcos(2(m-k)π/3)S", sum(0..=m, |k| re(2 * (m - k)) * s(m, k)))
        .num("Σcos((2k+1)π/3)B", sum(0..m, |k| re(2 * k + 1) * b(m, k + 1)));
    let imag = Chain::new("imaginary")
        .num("ΣC", catalan_total.clone())
        .num("(2√3/3)Σsin((m-k)π/3)T", sum(0..m, |k| im(m - k) * t(m - 1, k)))
        .num("(2√3/3)Σsin(2(m-k)π/3)S", sum(0..=m, |k| im(2 * (m - k)) * s(m, k)))
        .num("(2√3/3)Σsin((2k+1)π/3)B", sum(0..m, |k| im(2 * k + 1) * b(m, k + 1)));
    vec![raw, real, imag]
}

pub(super) fn ex1c(m: u32) -> Vec<Chain> {
    let alg = QuadAlgebra::sqrt5();
    let half = Rational::new(1, 2).expect("nonzero");
    let phi = QuadElement::new(&alg, half.clone(), half);
    let forms = moment_poly_forms(m).expect("m >= 1");
    let mi = m as i64;
    // Σ_{k<m} (−1)^k C_k
    let alt = sum(0..m, |k| sign(k as i64) * cat(k));
    let display = QuadElement::one(&alg).sub(&phi.scale(&alt)).expect("same algebra");

    let raw = Chain::new("raw")
        .side("S-form(φ)", SideValue::Quad(forms.s_form.eval_quad(&phi)))
        .side("T-form(φ)", SideValue::Quad(forms.t_form.eval_quad(&phi)))
        .side("B-form(φ)", SideValue::Quad(forms.b_form.eval_quad(&phi)))
        .side("C-form(φ)", SideValue::Quad(forms.catalan_form.eval_quad(&phi)))
        .side("1-φΣ(-1)^k C_k", SideValue::Quad(display));

    let lucas_chain = Chain::new("lucas")
        .num("Σ(-1)^k S L_{m-2k}", sum(0..=m, |k| sign(k as i64) * s(m, k) * luc(mi - 2 * k as i64)))
        .num("Σ T L_k", sum(0..m, |k| t(m - 1, k) * luc(k as i64)))
        .num("Σ(-1)^k B L_{m-2k-1}", sum(0..m, |k| sign(k as i64) * b(m, k + 1) * luc(mi - 2 * k as i64 - 1)))
        .num("(-1)^m L_m + (-1)^{m+1} L_{m+1} Σ(-1)^k C_k", sign(mi) * luc(mi) + sign(mi + 1) * luc(mi + 1) * &alt);

    // The √5 coordinate. Reflecting F_{2k−m} = (−1)^{m−1} F_{m−2k} flips the
    // sign of the S-side, and the right-hand side carries +(−1)^{m+1}.
    let fibonacci_chain = Chain::new("fibonacci")
        .num("Σ(-1)^{k+1} S F_{m-2k}", sum(0..=m, |k| sign(k as i64 + 1) * s(m, k) * fib(mi - 2 * k as i64)))
        .num("Σ T F_k", sum(0..m, |k| t(m - 1, k) * fib(k as i64)))
        .num("Σ(-1)^k B F_{m-1-2k}", sum(0..m, |k| sign(k as i64) * b(m, k + 1) * fib(mi - 1 - 2 * k as i64)))
        .num("(-1)^m F_m + (-1)^{m+1} F_{m+1} Σ(-1)^k C_k", sign(mi) * fib(mi) + sign(mi + 1) * fib(mi + 1) * &alt);

    vec![raw, lucas_chain, fibonacci_chain]
}

pub(super) fn ex2a(m: u32) -> Vec<Chain> {
    let mi = m as i64;
    vec![Chain::new("x=1")
        .num("ΣS", sum(0..=m, |k| s(m, k)))
        .num("2ΣB", Rational::from(2) * sum(0..m, |k| b(m, k + 1)))
        .num("ΣT 2^{m-k}", sum(0..m, |k| t(m - 1, k) * ipow(2, mi - k as i64)))
        .num("4^m - ΣC 2^{2m-2k-1}", ipow(4, mi) - sum(0..m, |k| cat(k) * ipow(2, 2 * mi - 2 * k as i64 - 1)))]
}

pub(super) fn ex2b(m: u32) -> Vec<Chain> {
    let mi = m as i64;
    vec![Chain::new("x=-1/2")
        .num("(-1)^m ΣS(-2)^{m-k}", sign(mi) * sum(0..=m, |k| s(m, k) * ipow(-2, mi - k as i64)))
        .num("(-1)^{m-1} ΣB(-2)^k", sign(mi - 1) * sum(0..m, |k| b(m, k + 1) * ipow(-2, k as i64)))
        .num("Σ(-1)^k T", sum(0..m, |k| sign(k as i64) * t(m - 1, k)))
        .num(
            "2^{-m} - Σ(-1)^{k+1} C_k 2^{k-m}",
            ipow(2, -mi) - sum(0..m, |k| sign(k as i64 + 1) * cat(k) * ipow(2, k as i64 - mi)),
        )
        .num("(-1)^{m-1} Φ_{m-1}", sign(mi - 1) * fine_number(m - 1))]
}

pub(super) fn ex2c(m: u32) -> Vec<Chain> {
    let mi = m as i64;
    let [s_form, ..] = x_forms(m);
    let (quotient, remainder) = s_form.synthetic_div(&Rational::from(-1)).expect("rational ring");
    let q_at = quotient.eval(&Rational::from(-1)).expect("rational ring");
    let x = Polynomial::x();
    let mut b_poly = Polynomial::zero();
    for k in 0..m {
        b_poly = &b_poly + &(&x.pow(m - 1 - k) * &poly_const(b(m, k + 1)));
    }
    vec![
        Chain::new("divisibility").num("ΣS(-1)^k", remainder).num("0", Rational::zero()),
        Chain::new("quotient")
            .side("ΣS x^k / (x+1)", SideValue::Poly(quotient))
            .side("ΣB x^{m-1-k}", SideValue::Poly(b_poly)),
        Chain::new("limit")
            .num("Q(-1)", q_at)
            .num("Σ(-1)^{k+1} k S", sum(0..=m, |k| sign(k as i64 + 1) * Rational::from(k) * s(m, k)))
            .num("Σ(-1)^{m-1-k} B", sum(0..m, |k| sign(mi - 1 - k as i64) * b(m, k + 1)))
            .num("(-1)^{m-1} T_{m-1,m-1}", sign(mi - 1) * t(m - 1, m - 1))
            .num("(-1)^{m-1} C_{m-1}", sign(mi - 1) * cat(m - 1)),
    ]
}

pub(super) fn fine(n: u32) -> Vec<Chain> {
    let ni = n as i64;
    vec![Chain::new("fine")
        .num("Φ_n", fine_number(n))
        .num("ΣB(-2)^j", sum(0..=n, |j| b(n + 1, j + 1) * ipow(-2, j as i64)))
        .num("ΣT(-1)^{n-j}", sum(0..=n, |j| t(n, j) * sign(ni - j as i64)))
        .num("-ΣS(-2)^{n+1-j}", -sum(0..=n + 1, |j| s(n + 1, j) * ipow(-2, ni + 1 - j as i64)))]
}
