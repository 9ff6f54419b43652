//! Scalar interpolation kernels: Pochhammer-Newton polynomials, Newton (forward-difference)
//! series, sinc, and the closed forms of the sinc series on periodic sequences.
//!
//! The Newton series used here interpolates values at the nonnegative integers,
//!
//! ```text
//! f(s) = Σ_n c_n P_n(s),   c_n = Σ_{k≤n} P_k(n) f(k) = (−1)^n Δ^n f(0),
//! P_n(s) = (−1)^n binom(s, n).
//! ```

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::{as_nonnegative_integer, cos_pi, principal_arg, sin_pi};
use crate::truncation::{
    PairwiseSum, SeriesOutcome, SeriesValue, StopReason, TailTracker, TruncationPolicy,
};

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// `P_n(α) = (−1)^n binom(α, n)`, evaluated by the product form so nonpositive integers
/// cause no trouble.
pub fn pochhammer_newton(n: usize, alpha: Complex64) -> Complex64 {
    let mut p = ONE;
    for m in 0..n {
        p *= (m as f64 - alpha) / (m as f64 + 1.0);
    }
    p
}

/// Iterates `P_0(α), P_1(α), …` with one multiply per step.
#[derive(Debug, Clone)]
pub(crate) struct PochhammerNewtonSeq {
    alpha: Complex64,
    n: usize,
    current: Complex64,
}

impl PochhammerNewtonSeq {
    pub(crate) fn new(alpha: Complex64) -> Self {
        Self {
            alpha,
            n: 0,
            current: ONE,
        }
    }
}

impl Iterator for PochhammerNewtonSeq {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        let out = self.current;
        self.current *= (self.n as f64 - self.alpha) / (self.n as f64 + 1.0);
        self.n += 1;
        Some(out)
    }
}

/// Row `n` of Pascal's triangle as `f64`, exact for `n ≤ 128`.
fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(n + 1);
    if n <= 128 {
        let mut c: u128 = 1;
        for k in 0..=n {
            row.push(c as f64);
            if k < n {
                // c * (n - k) can overflow near the middle for n = 128; divide first where exact.
                let g = gcd(c, (k + 1) as u128);
                c = (c / g) * ((n - k) as u128 / ((k + 1) as u128 / g));
            }
        }
    } else {
        let mut c = 1.0f64;
        for k in 0..=n {
            row.push(c);
            c *= (n - k) as f64 / (k + 1) as f64;
        }
    }
    row
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Newton coefficients `c_0 … c_N` of a sample sequence `f(0) … f(N)` (origin fixed at 0).
///
/// Each coefficient carries a rounding bound; the binomial sums lose roughly one bit per
/// order, so high-order coefficients of floating-point samples are eventually pure noise.
#[derive(Debug, Clone, Serialize)]
pub struct NewtonCoefficients {
    samples: Vec<Complex64>,
    values: Vec<Complex64>,
    noise: Vec<f64>,
}

impl NewtonCoefficients {
    /// Interpolation origin; always 0 (values at the nonnegative integers).
    pub fn origin(&self) -> i64 {
        0
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Rounding bound of each coefficient.
    pub fn noise_bounds(&self) -> &[f64] {
        &self.noise
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `c_n = Σ_{k≤n} P_k(n) f(k)` for every `n` covered by the samples, pairwise summed.
pub fn newton_coefficients(samples: &[Complex64]) -> Result<NewtonCoefficients> {
    if samples.is_empty() {
        return Err(Error::domain("newton_coefficients needs at least one sample"));
    }
    if samples.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::domain("samples must be finite"));
    }
    let mut values = Vec::with_capacity(samples.len());
    let mut noise = Vec::with_capacity(samples.len());
    for n in 0..samples.len() {
        let row = binomial_row(n);
        let mut acc = PairwiseSum::new();
        let mut magnitude = 0.0;
        for (k, (&b, &f)) in row.iter().zip(samples).enumerate() {
            let signed = if k % 2 == 0 { b } else { -b };
            let t = f * signed;
            magnitude += t.norm();
            acc.push(t);
        }
        let depth = (usize::BITS - n.leading_zeros()) as f64;
        values.push(acc.total().expect("n + 1 terms"));
        noise.push((depth + 2.0) * f64::EPSILON * magnitude);
    }
    Ok(NewtonCoefficients {
        samples: samples.to_vec(),
        values,
        noise,
    })
}

/// Evaluates `Σ_n c_n P_n(s)` under `policy`.
///
/// At a nonnegative integer node `s = m` covered by the samples the series terminates at
/// `n = m` with value `f(m)`, which is returned directly. Otherwise the sum stops at the
/// tail criterion, at `max_terms`, when the samples run out, or when the next coefficient
/// is unresolved (its rounding bound exceeds it) and could move the sum by more than
/// `abs_tol`.
pub fn newton_eval(
    coeffs: &NewtonCoefficients,
    s: Complex64,
    policy: &TruncationPolicy,
) -> SeriesOutcome<Complex64> {
    if let Some(m) = as_nonnegative_integer(s, 0.0) {
        if (m as usize) < coeffs.len() {
            return SeriesOutcome {
                value: coeffs.samples[m as usize],
                terms_used: m as usize + 1,
                tail_estimate: 0.0,
                stop: StopReason::Exact,
            };
        }
    }
    let limit = policy.max_terms().min(coeffs.len());
    let mut acc = PairwiseSum::new();
    let mut tail = TailTracker::new(policy);
    let mut used = 0;
    let mut stop = None;
    for (n, p) in PochhammerNewtonSeq::new(s).take(limit).enumerate() {
        let c = coeffs.values[n];
        let noise = coeffs.noise[n] * p.norm();
        if n > 0 && noise > policy.abs_tol() && coeffs.noise[n] > c.norm() {
            stop = Some(StopReason::NoiseFloor);
            break;
        }
        let term = c * p;
        acc.push(term);
        used = n + 1;
        if tail.record(term.norm()) {
            stop = Some(StopReason::TailWindow);
            break;
        }
    }
    let stop = stop.unwrap_or(if limit < policy.max_terms() {
        StopReason::SamplesExhausted
    } else {
        StopReason::MaxTerms
    });
    SeriesOutcome {
        value: acc.total().unwrap_or_default(),
        terms_used: used,
        tail_estimate: tail.estimate(),
        stop,
    }
}

/// The Newton operator series `Σ_n P_n(α) (I − A)^n v` for a linear map `A`.
///
/// `shift` must map `w ↦ (I − A) w`; the inner binomial sums `Σ_k P_k(n) A^k v` are
/// formed through that identity rather than expanded. For `α = m` a nonnegative integer the
/// series is finite and is summed exactly through `n = m`.
pub fn newton_operator_series<V: SeriesValue>(
    start: V,
    mut shift: impl FnMut(&V) -> V,
    alpha: Complex64,
    policy: &TruncationPolicy,
) -> SeriesOutcome<V> {
    let finite = as_nonnegative_integer(alpha, 0.0).map(|m| m as usize);
    let mut acc = PairwiseSum::new();
    let mut tail = TailTracker::new(policy);
    let mut v = start;
    let mut p_seq = PochhammerNewtonSeq::new(alpha);
    let mut used = 0;
    let limit = finite.map_or(policy.max_terms(), |m| m + 1);
    let mut stop = if finite.is_some() {
        StopReason::Exact
    } else {
        StopReason::MaxTerms
    };
    for n in 0..limit {
        let p = p_seq.next().expect("infinite");
        let term = v.scaled(p);
        let mag = term.magnitude();
        acc.push(term);
        used = n + 1;
        if finite.is_none() && tail.record(mag) {
            stop = StopReason::TailWindow;
            break;
        }
        if finite.is_some() {
            tail.record(mag);
        }
        if n + 1 < limit {
            v = shift(&v);
        }
    }
    SeriesOutcome {
        value: acc.total().expect("at least one term"),
        terms_used: used,
        tail_estimate: if finite.is_some() { 0.0 } else { tail.estimate() },
        stop,
    }
}

/// Principal `x^α` from the Newton series of `k ↦ x^k`.
///
/// The Newton coefficients of `k ↦ x^k` are `(1 − x)^n`; they are built by repeated
/// multiplication, which is the same quantity as `newton_coefficients` on the samples
/// without its `(1 + |x|)^n` rounding growth.
pub fn newton_eval_power(
    x: Complex64,
    alpha: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesOutcome<Complex64>> {
    let finite = as_nonnegative_integer(alpha, 0.0).is_some();
    if !finite && (x - ONE).norm() >= 1.0 {
        return Err(Error::domain(format!(
            "Newton series for x^α needs |x - 1| < 1 (got |x - 1| = {})",
            (x - ONE).norm()
        )));
    }
    let ratio = ONE - x;
    Ok(newton_operator_series(ONE, |v| v * ratio, alpha, policy))
}

/// Normalized sinc, `sin(πx)/(πx)`, with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let px2 = (PI * x) * (PI * x);
        1.0 - px2 / 6.0 + px2 * px2 / 120.0
    } else {
        sin_pi(x) / (PI * x)
    }
}

/// Symmetric sinc series `Σ_{|n|≤N} sinc(α − n) T^n` for an invertible `T`.
///
/// `forward` maps `T^n ↦ T^{n+1}` and `backward` maps `T^{−n} ↦ T^{−n−1}`. Terms `n` and
/// `−n` are always added together; the series is only conditionally convergent.
pub fn shannon_series<V: SeriesValue>(
    identity: V,
    mut forward: impl FnMut(&V) -> V,
    mut backward: impl FnMut(&V) -> V,
    alpha: f64,
    policy: &TruncationPolicy,
) -> SeriesOutcome<V> {
    if alpha.fract() == 0.0 && alpha.abs() <= policy.max_terms() as f64 {
        // every weight but sinc(0) vanishes: the sum is T^α itself
        let m = alpha as i64;
        let mut v = identity;
        for _ in 0..m.unsigned_abs() {
            v = if m > 0 { forward(&v) } else { backward(&v) };
        }
        return SeriesOutcome {
            value: v,
            terms_used: m.unsigned_abs() as usize + 1,
            tail_estimate: 0.0,
            stop: StopReason::Exact,
        };
    }
    let mut acc = PairwiseSum::new();
    let mut tail = TailTracker::new(policy);
    let first = identity.scaled(Complex64::new(sinc(alpha), 0.0));
    tail.record(first.magnitude());
    acc.push(first);
    let mut pos = identity.clone();
    let mut neg = identity;
    let mut used = 1;
    let mut stop = StopReason::MaxTerms;
    for n in 1..=policy.max_terms() {
        pos = forward(&pos);
        neg = backward(&neg);
        let wp = sinc(alpha - n as f64);
        let wn = sinc(alpha + n as f64);
        let mut pair = pos.scaled(Complex64::new(wp, 0.0));
        pair.add_assign_ref(&neg.scaled(Complex64::new(wn, 0.0)));
        let mag = pair.magnitude();
        acc.push(pair);
        used = n;
        if tail.record(mag) {
            stop = StopReason::TailWindow;
            break;
        }
    }
    SeriesOutcome {
        value: acc.total().expect("nonempty"),
        terms_used: used,
        tail_estimate: tail.estimate(),
        stop,
    }
}

/// Symmetric partial sums of `Σ_n sinc(α − n) e^{inθ}` for `θ ∈ (−π, π]`.
///
/// Converges to `e^{iαθ}` for `θ ∈ (−π, π)` and to `cos(πα)` at `θ = π`.
pub fn shannon_eval_power(
    theta: f64,
    alpha: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesOutcome<Complex64>> {
    if !(theta > -PI && theta <= PI) {
        return Err(Error::domain(format!("θ = {theta} is outside (−π, π]")));
    }
    let x = Complex64::from_polar(1.0, theta);
    let xc = x.conj();
    Ok(shannon_series(ONE, |v| v * x, |v| v * xc, alpha, policy))
}

/// Limit of the symmetric sinc series at `x = e^{iθ}`: `e^{iαθ}` off the negative axis,
/// `cos(πα)` on it.
pub fn shannon_multiplier(lambda: Complex64, alpha: f64) -> Complex64 {
    let theta = principal_arg(lambda);
    if theta == PI {
        Complex64::new(cos_pi(alpha), 0.0)
    } else {
        Complex64::from_polar(1.0, alpha * theta)
    }
}

/// Sum of `sinc(x − kN)` over all `k`:
/// `(1/N) sin(πx) cot(πx/N)` for even `N`, `(1/N) sin(πx) csc(πx/N)` for odd `N`.
pub fn periodic_kernel(period: usize, x: f64) -> f64 {
    assert!(period >= 1, "period must be positive");
    let n = period as f64;
    // nearest multiple of N
    let k = (x / n).round();
    let d = x - k * n;
    if d.abs() < 1e-4 {
        // sin(πd)/(πd) over the matching small-angle ratio of cot or csc, times the sign
        // picked up from the shift by kN.
        let a = PI * d;
        let b = a / n;
        let sinc_a = 1.0 - a * a / 6.0 + a.powi(4) / 120.0;
        let ratio_b = if period.is_multiple_of(2) {
            // tan(b)/b
            1.0 + b * b / 3.0 + 2.0 * b.powi(4) / 15.0
        } else {
            // sin(b)/b
            1.0 - b * b / 6.0 + b.powi(4) / 120.0
        };
        // the shift by kN flips sin(πx) and csc(πx/N) together, so no sign survives
        return sinc_a / ratio_b;
    }
    let s = sin_pi(x);
    let t = x / n;
    if period.is_multiple_of(2) {
        s * cos_pi(t) / (n * sin_pi(t))
    } else {
        s / (n * sin_pi(t))
    }
}

/// The `N` weights `w_n(α) = periodic_kernel(N, α − n)` of the periodic sinc formula.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodicWeights {
    pub period: usize,
    pub order: f64,
    pub weights: Vec<f64>,
}

impl PeriodicWeights {
    /// `Σ_n w_n λ^n`, the factor applied on the `λ`-eigenspace of an order-`N` operator.
    pub fn multiplier(&self, lambda: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut pow = ONE;
        for &w in &self.weights {
            acc += pow * w;
            pow *= lambda;
        }
        acc
    }
}

pub fn periodic_power_weights(period: usize, alpha: f64) -> PeriodicWeights {
    assert!(period >= 1, "period must be positive");
    let weights = (0..period)
        .map(|n| periodic_kernel(period, alpha - n as f64))
        .collect();
    PeriodicWeights {
        period,
        order: alpha,
        weights,
    }
}
