use kesten_core::identities::{hankel_check, hankel_minors, HankelFamily};
use kesten_core::moments::{moment_closed, KestenParams};
use kesten_core::Rational;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn ts() -> [Rational; 4] {
    [q(1, 2), q(3, 4), q(1, 1), q(6, 5)]
}

fn ds() -> [Rational; 3] {
    [q(0, 1), q(1, 2), q(1, 1)]
}

#[test]
fn kesten_even_moments_are_stieltjes() {
    for t in ts() {
        let report = hankel_check(HankelFamily::KestenEven, &t, &Rational::zero(), 5).unwrap();
        assert!(report.passed, "{report:?}");
    }
}

#[test]
fn truncated_convex_is_stieltjes_for_t_at_most_one() {
    for t in [q(1, 2), q(3, 4), q(1, 1)] {
        for d in ds() {
            let report = hankel_check(HankelFamily::TruncatedConvex, &t, &d, 5).unwrap();
            assert!(report.passed, "{report:?}");
        }
    }
}

/// `1 − Σ_{k<m} t^{k+1}(1−t)^k C_k = (1−t)^m M_{2m}(1, t)`: the product of
/// the moments of a point mass at `1 − t` and of a measure on `[0, ∞)`. For
/// `t > 1` that point is negative, so the sequence (and its convex
/// combinations with the constant sequence) has a representing measure on
/// the real line but not on `[0, ∞)`: the plain Hankel minors stay
/// nonnegative while a shifted one turns negative.
#[test]
fn truncated_convex_above_one_is_hamburger_but_not_stieltjes() {
    let t = q(6, 5);
    for d in ds() {
        let minors = hankel_minors(HankelFamily::TruncatedConvex, &t, &d, 5).unwrap();
        assert!(minors.plain.iter().all(|m| !m.is_negative()), "d={d}");
    }
    let full = hankel_minors(HankelFamily::TruncatedConvex, &t, &q(1, 1), 5).unwrap();
    assert_eq!(full.shifted[0], q(-1, 5));
    let half = hankel_minors(HankelFamily::TruncatedConvex, &t, &q(1, 2), 5).unwrap();
    assert!(half.shifted[0].is_positive());
    assert_eq!(half.shifted[1], q(-1656, 15625));
    assert!(hankel_check(HankelFamily::TruncatedConvex, &t, &q(0, 1), 5).unwrap().passed);
}

#[test]
fn truncated_sequence_factors_through_the_moments() {
    for t in ts() {
        let params = KestenParams::classify(Rational::one(), t.clone()).unwrap();
        let seq = hankel_minors(HankelFamily::TruncatedConvex, &t, &q(1, 1), 5).unwrap().sequence;
        for (m, s) in seq.iter().enumerate() {
            let m = m as u32;
            let expect = (Rational::one() - &t).powu(m) * moment_closed(m, &params).unwrap().value;
            assert_eq!(*s, expect, "t={t} m={m}");
        }
    }
}
