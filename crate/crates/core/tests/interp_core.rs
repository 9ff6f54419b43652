mod common;

use common::c;
use fracterp::interp_core::{
    newton_coefficients, newton_eval, newton_eval_power, periodic_kernel, periodic_power_weights, pochhammer_newton,
    shannon_eval_power, shannon_multiplier,
};
use fracterp::{Complex64, StopReason, TruncationPolicy};
use proptest::prelude::*;
use std::f64::consts::PI;

fn complex() -> impl Strategy<Value = Complex64> {
    (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Forward differences `Δ^n f(0)` from the full difference table.
fn forward_differences(f: &[Complex64]) -> Vec<Complex64> {
    let mut row = f.to_vec();
    let mut out = Vec::new();
    while !row.is_empty() {
        out.push(row[0]);
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    out
}

proptest! {
    #[test]
    fn newton_eval_reproduces_nodes(samples in prop::collection::vec(complex(), 3..24), pick in 0usize..1000) {
        let coeffs = newton_coefficients(&samples).unwrap();
        let m = pick % samples.len();
        let out = newton_eval(&coeffs, c(m as f64), &TruncationPolicy::default());
        prop_assert!((out.value - samples[m]).norm() <= 1e-12 * samples[m].norm().max(1.0));
        prop_assert_eq!(out.stop, StopReason::Exact);
    }

    #[test]
    fn coefficients_match_difference_table(samples in prop::collection::vec(complex(), 9)) {
        let coeffs = newton_coefficients(&samples).unwrap();
        let table = forward_differences(&samples);
        for (n, d) in table.iter().enumerate() {
            let want = if n % 2 == 0 { *d } else { -*d };
            prop_assert!((coeffs.values()[n] - want).norm() <= 1e-10 * want.norm().max(1.0),
                "n = {}: {} vs {}", n, coeffs.values()[n], want);
        }
    }

    #[test]
    fn newton_recovers_polynomials(a in complex(), b in complex(), d in complex(), s in (-3.0..6.0f64)) {
        // cubic samples have vanishing differences beyond order 3
        let p = |x: f64| a + b * x + d * x * x * x;
        let samples: Vec<Complex64> = (0..12).map(|k| p(k as f64)).collect();
        let coeffs = newton_coefficients(&samples).unwrap();
        let out = newton_eval(&coeffs, c(s), &TruncationPolicy::new(12, 1e-300, 1).unwrap());
        prop_assert!((out.value - p(s)).norm() <= 1e-9 * p(s).norm().max(1.0));
    }

    #[test]
    fn pochhammer_matches_binomial(n in 0usize..30, alpha in -4.0..4.0f64) {
        // (−1)^n binom(α, n) by the falling-factorial product
        let mut want = 1.0;
        for j in 0..n {
            want *= (alpha - j as f64) / (j as f64 + 1.0);
        }
        if n % 2 == 1 {
            want = -want;
        }
        let got = pochhammer_newton(n, c(alpha));
        prop_assert!((got - c(want)).norm() <= 1e-12 * want.abs().max(1.0));
    }
}

#[test]
fn scalar_power_matches_principal_branch() {
    let policy = TruncationPolicy::new(200, 1e-16, 3).unwrap();
    for alpha in [0.25, 0.5, 1.5, 2.5] {
        for r in [0.0, 0.3, 0.6, 0.8] {
            for k in 0..12 {
                let x = c(1.0) + Complex64::from_polar(r, 2.0 * PI * k as f64 / 12.0);
                let out = newton_eval_power(x, c(alpha), &policy).unwrap();
                assert!(out.terms_used <= 200);
                let want = x.powc(c(alpha));
                assert!((out.value - want).norm() < 1e-8, "x = {x}, α = {alpha}: {} vs {want}", out.value);
            }
        }
    }
}

#[test]
fn scalar_power_outside_disk_is_refused() {
    let policy = TruncationPolicy::default();
    assert!(newton_eval_power(c(2.5), c(0.5), &policy).is_err());
    // integer α needs no convergence: the series is finite
    let out = newton_eval_power(c(3.0), c(3.0), &policy).unwrap();
    assert!((out.value - c(27.0)).norm() < 1e-12);
}

#[test]
fn shannon_error_decays_like_one_over_n() {
    for theta in [PI / 3.0, -PI / 3.0, PI / 2.0, -PI / 2.0, 2.5, -2.5] {
        for alpha in [0.4, 1.3] {
            let want = Complex64::from_polar(1.0, alpha * theta);
            let error = |n: usize| {
                let p = TruncationPolicy::new(n, 0.0, 1).unwrap();
                (shannon_eval_power(theta, alpha, &p).unwrap().value - want).norm()
            };
            // the error oscillates with N; compare upper envelopes over short windows
            let envelope = |n: usize| (n..n + 8).map(|m| error(m) * m as f64).fold(0.0, f64::max) / n as f64;
            let fitted = 1.5 * envelope(100) * 100.0;
            for n in [400, 1600, 6400] {
                let e = envelope(n);
                assert!(e < fitted / n as f64, "θ = {theta}, α = {alpha}, N = {n}: {e}");
                assert!(e < envelope(n / 4), "θ = {theta}, α = {alpha}, N = {n}");
            }
        }
    }
}

#[test]
fn shannon_at_pi_tends_to_cosine() {
    let p = TruncationPolicy::new(100_000, 0.0, 1).unwrap();
    for alpha in [0.3, 0.5, 1.2] {
        let out = shannon_eval_power(PI, alpha, &p).unwrap();
        assert!((out.value - c((PI * alpha).cos())).norm() < 1e-4);
        assert!((shannon_multiplier(c(-1.0), alpha) - c((PI * alpha).cos())).norm() < 1e-15);
    }
    assert!(shannon_eval_power(-PI, 0.5, &p).is_err());
}

/// `Σ_{|n|≤K} sinc(α − n) c_{n mod N}` summed directly.
fn symmetric_shannon_sum(c_seq: &[Complex64], alpha: f64, k: i64) -> Complex64 {
    let n = c_seq.len() as i64;
    let sinc = |x: f64| if x == 0.0 { 1.0 } else { (PI * x).sin() / (PI * x) };
    let mut acc = c_seq[0] * sinc(alpha);
    for j in 1..=k {
        acc += c_seq[(j % n) as usize] * sinc(alpha - j as f64) + c_seq[((-j).rem_euclid(n)) as usize] * sinc(alpha + j as f64);
    }
    acc
}

#[test]
fn periodic_weights_sum_the_shannon_series() {
    let mut r = common::rng(11);
    use rand::Rng;
    for period in [2usize, 3, 4, 6] {
        let seq: Vec<Complex64> = (0..period).map(|_| Complex64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))).collect();
        for alpha in [0.25, 0.5, 1.7, -0.6] {
            let w = periodic_power_weights(period, alpha);
            let exact: Complex64 = w.weights.iter().zip(&seq).map(|(w, v)| v * *w).sum();
            let sum = symmetric_shannon_sum(&seq, alpha, 50_000);
            assert!((exact - sum).norm() < 1e-3, "N = {period}, α = {alpha}: {exact} vs {sum}");
        }
    }
}

#[test]
fn periodic_multiplier_table_for_order_four() {
    for i in 0..=200 {
        let alpha = i as f64 * 0.01;
        let w = periodic_power_weights(4, alpha);
        let half = PI * alpha / 2.0;
        let cases = [
            (c(1.0), c(1.0)),
            (Complex64::i(), Complex64::new(half.cos(), half.sin())),
            (-Complex64::i(), Complex64::new(half.cos(), -half.sin())),
            (c(-1.0), c((PI * alpha).cos())),
        ];
        for (lambda, want) in cases {
            assert!((w.multiplier(lambda) - want).norm() < 1e-10, "α = {alpha}, λ = {lambda}");
        }
    }
}

#[test]
fn periodic_multiplier_on_general_roots_of_unity() {
    for period in [3usize, 5, 6, 8] {
        for m in 0..period {
            let angle = 2.0 * PI * m as f64 / period as f64;
            let reduced = if angle > PI { angle - 2.0 * PI } else { angle };
            let lambda = Complex64::from_polar(1.0, angle);
            for alpha in [0.3, 0.5, 1.25] {
                let got = periodic_power_weights(period, alpha).multiplier(lambda);
                let want = if (reduced - PI).abs() < 1e-12 {
                    c((PI * alpha).cos())
                } else {
                    Complex64::from_polar(1.0, alpha * reduced)
                };
                assert!((got - want).norm() < 1e-10, "N = {period}, m = {m}, α = {alpha}");
            }
        }
    }
}

#[test]
fn periodic_kernel_is_continuous_across_its_series_branch() {
    for period in [3usize, 4] {
        for center in [0.0, period as f64, -(period as f64)] {
            for d in [1e-4, -1e-4] {
                let inside = periodic_kernel(period, center + d * 0.999);
                let outside = periodic_kernel(period, center + d * 1.001);
                assert!((inside - outside).abs() < 1e-6, "N = {period}, x = {center} + {d}");
            }
            assert!(periodic_kernel(period, center).abs() > 0.999);
        }
    }
}
