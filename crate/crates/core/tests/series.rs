//! Tangent expansion, Euler–Maclaurin and constant-series checks against
//! independent oracles.

use std::f64::consts::PI;

use stirling_lab::constant_chain::{
    constant_series_partial, constant_series_tail_bracket, constant_series_term,
    stirling_constant_closed,
};
use stirling_lab::em_factorial::{
    log_factorial_direct, log_factorial_em, sawtooth_integral, sawtooth_unit_integral,
    stirling_ratio,
};
use stirling_lab::suite::tangent_grid;
use stirling_lab::tangent_series::{pi_tan_pi, tan_pf_partial, tan_pf_tail_bracket};

#[test]
fn tangent_enclosure_on_grid() {
    for n in [2, 10, 100, 1_000, 10_000, 100_000] {
        for x in tangent_grid() {
            let br = tan_pf_tail_bracket(x, n)
                .unwrap()
                .shift(tan_pf_partial(x, n).unwrap());
            let exact = PI * (PI * x).tan();
            assert!(br.contains(exact), "x={x} N={n}: {exact} not in {br:?}");
        }
    }
}

#[test]
fn tangent_partial_sums_increase_and_brackets_shrink() {
    for x in tangent_grid().into_iter().skip(1) {
        let mut prev_sum = 0.0;
        let mut prev_width = f64::INFINITY;
        for n in [10, 100, 1_000, 10_000] {
            let s = tan_pf_partial(x, n).unwrap();
            let w = tan_pf_tail_bracket(x, n).unwrap().width();
            assert!(s > prev_sum && w < prev_width, "x={x} N={n}");
            prev_sum = s;
            prev_width = w;
        }
    }
}

#[test]
fn pi_tan_pi_meets_requested_width() {
    for x in tangent_grid() {
        for tol in [1e-6, 1e-9] {
            let br = pi_tan_pi(x, tol).unwrap();
            assert!(br.width() <= tol);
            assert!(br.contains(PI * (PI * x).tan()), "x={x} tol={tol}");
        }
    }
}

#[test]
fn euler_maclaurin_identity_is_exact() {
    for n in 1..=1000u64 {
        let direct = log_factorial_direct(n).unwrap();
        let em = log_factorial_em(n).unwrap();
        assert!((em - direct).abs() <= 1e-11 * direct.max(1.0), "n={n}");
    }
}

#[test]
fn stirling_ratio_decreases_to_one() {
    let mut prev = f64::INFINITY;
    for n in 1..=1000u64 {
        let r = stirling_ratio(n).unwrap();
        assert!(r > 1.0 && r < prev, "n={n}");
        prev = r;
    }
    // r_n − 1 ≈ 1/(12n); n(r_n − 1) = 0.083336805… at n = 1000.
    let scaled = 1000.0 * (stirling_ratio(1000).unwrap() - 1.0);
    assert!((0.0833..=0.0834).contains(&scaled), "{scaled}");
    assert!((stirling_ratio(10).unwrap() - 1.008_365_359_132_4).abs() < 1e-12);
    assert!((stirling_ratio(100).unwrap() - 1.000_833_677_872).abs() < 1e-11);
}

/// Composite Simpson on each linear piece of the sawtooth, independent of
/// the library's quadrature.
fn simpson_unit(nu: u64) -> f64 {
    let m = 2000;
    let h = 1.0 / m as f64;
    let f = |s: f64| (s - 0.5) / (1.0 + nu as f64 + s);
    let mut acc = f(0.0) + f(1.0);
    for i in 1..m {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(i as f64 * h);
    }
    acc * h / 3.0
}

#[test]
fn unit_integrals_match_simpson_oracle() {
    for nu in 0..=100 {
        let d = (sawtooth_unit_integral(nu) - simpson_unit(nu)).abs();
        assert!(d <= 1e-10, "nu={nu}: {d:e}");
    }
}

#[test]
fn series_terms_are_shifted_unit_integrals() {
    for nu in 1..=10_000u64 {
        let t = constant_series_term(nu).unwrap();
        assert_eq!(t, sawtooth_unit_integral(nu - 1));
    }
    assert_eq!(
        constant_series_partial(10_000).unwrap(),
        sawtooth_integral(10_000).unwrap()
    );
}

#[test]
fn tail_bracket_encloses_remaining_sum() {
    let c = stirling_constant_closed();
    // Tails at these levels are ~1/(12N); the closed constant is accurate to
    // ~1e-17, so the enclosure is checked with a tiny rounding allowance.
    for n in [10, 100, 1_000, 10_000] {
        let tail = c - constant_series_partial(n).unwrap();
        let br = constant_series_tail_bracket(n).unwrap();
        let slack = 1e-15;
        assert!(
            br.lower() - slack <= tail && tail <= br.upper() + slack,
            "N={n}: {tail} {br:?}"
        );
        assert!(br.width() <= 1.0 / (144.0 * (n as f64).powi(3)) + f64::EPSILON * br.lower().abs());
    }
}

#[test]
fn tail_bracket_against_brute_force_sum() {
    // Σ_{ν=N+1}^{M} t_ν with M large; the rest beyond M is below 1e-8.
    let n = 100u64;
    let m = 10_000_000u64;
    let partial: f64 = (n + 1..=m)
        .map(|nu| constant_series_term(nu).unwrap())
        .sum();
    let br = constant_series_tail_bracket(n).unwrap();
    let rest = constant_series_tail_bracket(m).unwrap();
    assert!(br.lower() <= partial + rest.upper() + 1e-15);
    assert!(partial + rest.lower() - 1e-15 <= br.upper());
}
