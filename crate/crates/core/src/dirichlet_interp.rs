//! Newton interpolation of Dirichlet series from their values at `0, 1, 2, …`.
//!
//! `g(s) = Σ_n [Σ_k P_k(n) g(k)] P_n(s)` is applied to the Dirichlet eta function (and so
//! to `ζ(s) = η(s)/(1 − 2^{1−s})`), to shifted zeta values `ζ(k + 1 + ε)`, to `1/ζ`, and to
//! Mellin transforms divided by `Γ`.

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::interp_core::{newton_coefficients, newton_eval, PochhammerNewtonSeq};
use crate::special::{as_nonnegative_integer, cpow, gamma};
use crate::truncation::{SeriesOutcome, TruncationPolicy};

/// Where a sample value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    DirectSeries,
    AcceleratedAlternatingSeries,
    ClosedForm,
    UserSupplied,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::DirectSeries => "direct_series",
            Provenance::AcceleratedAlternatingSeries => "accelerated_alternating_series",
            Provenance::ClosedForm => "closed_form",
            Provenance::UserSupplied => "user_supplied",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "direct_series" => Ok(Provenance::DirectSeries),
            "accelerated_alternating_series" => Ok(Provenance::AcceleratedAlternatingSeries),
            "closed_form" => Ok(Provenance::ClosedForm),
            "user_supplied" => Ok(Provenance::UserSupplied),
            other => Err(Error::Parse(format!("unknown provenance tag {other:?}"))),
        }
    }
}

/// Values `g(0), …, g(N)` with one provenance tag per entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirichletSamples {
    values: Vec<Complex64>,
    provenance: Vec<Provenance>,
}

impl DirichletSamples {
    /// Needs `N ≥ 2` (at least three values), all finite, one tag per value.
    pub fn new(values: Vec<Complex64>, provenance: Vec<Provenance>) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::domain("need samples g(0), …, g(N) with N ≥ 2"));
        }
        if provenance.len() != values.len() {
            return Err(Error::domain("one provenance tag per sample"));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::domain("samples must be finite"));
        }
        Ok(Self { values, provenance })
    }

    /// Samples supplied by the caller.
    pub fn user_supplied(values: Vec<Complex64>) -> Result<Self> {
        let n = values.len();
        Self::new(values, vec![Provenance::UserSupplied; n])
    }

    /// `g(k)` for `k = 0..=k_max` from a closed form.
    pub fn from_closed_form(k_max: usize, g: impl Fn(usize) -> Complex64) -> Result<Self> {
        Self::new(
            (0..=k_max).map(g).collect(),
            vec![Provenance::ClosedForm; k_max + 1],
        )
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The first `n` samples (at least three are kept).
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.clamp(3, self.values.len());
        Self {
            values: self.values[..n].to_vec(),
            provenance: self.provenance[..n].to_vec(),
        }
    }
}

/// Policy used by the zeta routines when the caller has no preference: 64 samples/terms.
///
/// The tail tolerance sits above the rounding floor of the binomial transform of 64
/// double-precision samples.
pub fn default_dirichlet_policy() -> TruncationPolicy {
    TruncationPolicy::new(64, 1e-9, 3).expect("valid constants")
}

/// `Σ_{k≥0} (−1)^k a_k` by the Cohen–Villegas–Zagier acceleration with `n` terms; the error
/// is about `(3 + √8)^{−n}` for totally monotone `a_k`.
fn accelerated_alternating_sum(n: usize, a: impl Fn(usize) -> f64) -> f64 {
    let mut d = (3.0 + 8f64.sqrt()).powi(n as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    let nf = n as f64;
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        s += c * a(k);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// `η(k) = Σ_{n≥1} (−1)^{n−1} n^{−k}` for a nonnegative integer `k`, with its provenance.
pub fn eta_integer(k: usize) -> (f64, Provenance) {
    match k {
        0 => (0.5, Provenance::ClosedForm),
        1 => (LN_2, Provenance::ClosedForm),
        _ => (
            accelerated_alternating_sum(24, |j| ((j + 1) as f64).powi(-(k as i32))),
            Provenance::AcceleratedAlternatingSeries,
        ),
    }
}

/// `η(0), …, η(max(k_max, 2))`.
pub fn eta_integer_values(k_max: usize) -> DirichletSamples {
    let (values, provenance) = (0..=k_max.max(2))
        .map(|k| {
            let (v, p) = eta_integer(k);
            (Complex64::new(v, 0.0), p)
        })
        .unzip();
    DirichletSamples::new(values, provenance).expect("at least three finite samples")
}

/// Bernoulli numbers `B_2, B_4, …, B_16`.
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

/// `ζ(s)` by a direct sum of `N = 20` terms plus the Euler–Maclaurin tail through `B_16`.
///
/// Accurate to about 1e-13 for moderate `|s|` away from the pole; independent of the Newton
/// machinery.
pub fn zeta_reference(s: Complex64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole);
    }
    const N: usize = 20;
    let nf = N as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in (1..N).rev() {
        sum += cpow(Complex64::new(n as f64, 0.0), -s);
    }
    let n_pow = cpow(Complex64::new(nf, 0.0), -s);
    sum += n_pow * nf / (s - 1.0) + n_pow * 0.5;
    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · N^{−s−2j+1}
    let mut rising = s; // s(s+1)…(s+2j−2)
    let mut fact = 2.0; // (2j)!
    let mut npow = n_pow / nf; // N^{−s−2j+1}
    for (j, &b) in BERNOULLI.iter().enumerate() {
        sum += rising * npow * (b / fact);
        let m = 2.0 * (j + 1) as f64;
        rising *= (s + m - 1.0) * (s + m);
        fact *= (m + 1.0) * (m + 2.0);
        npow /= nf * nf;
    }
    Ok(sum)
}

/// `Σ_n [Σ_k P_k(n) g(k)] P_n(s)` under `policy`; exact at integer nodes.
pub fn dirichlet_newton_interpolate(
    samples: &DirichletSamples,
    s: Complex64,
    policy: &TruncationPolicy,
) -> SeriesOutcome<Complex64> {
    let coeffs = newton_coefficients(samples.values()).expect("validated samples");
    newton_eval(&coeffs, s, policy)
}

/// `1 − 2^{1−s}`, checked for the pole at `s = 1` and its other zeros.
fn eta_factor(s: Complex64) -> Result<Complex64> {
    if (s - 1.0).norm() < 1e-12 {
        return Err(Error::Pole);
    }
    let factor = 1.0 - cpow(Complex64::new(2.0, 0.0), 1.0 - s);
    if factor.norm() < 1e-12 {
        return Err(Error::FactorZero { s });
    }
    Ok(factor)
}

/// `ζ(s) = [Σ_n (Σ_k P_k(n) η(k)) P_n(s)] / (1 − 2^{1−s})` from `policy.max_terms()` samples.
pub fn zeta_via_eta(s: Complex64, policy: &TruncationPolicy) -> Result<SeriesOutcome<Complex64>> {
    let factor = eta_factor(s)?;
    let samples = eta_integer_values(policy.max_terms().saturating_sub(1));
    let out = dirichlet_newton_interpolate(&samples, s, policy);
    let scale = factor.norm();
    let mut out = out.map(|v| v / factor);
    out.tail_estimate /= scale;
    Ok(out)
}

/// Result of [`reciprocal_zeta`]; experimental, since no convergence region is known.
#[derive(Debug, Clone, Serialize)]
pub struct ReciprocalZeta {
    pub outcome: SeriesOutcome<Complex64>,
    /// Partial sums `Σ_{n≤N} c_n P_n(s)` for `N = 0, 1, …` up to the sample count.
    pub partial_sums: Vec<Complex64>,
    pub experimental: bool,
}

/// Samples `1/ζ(0) = −2`, `1/ζ(1) = 0`, `1/ζ(k)` from [`zeta_reference`] for `k ≥ 2`.
pub fn reciprocal_zeta_samples(k_max: usize) -> DirichletSamples {
    let mut values = vec![Complex64::new(-2.0, 0.0), Complex64::new(0.0, 0.0)];
    let mut provenance = vec![Provenance::ClosedForm, Provenance::ClosedForm];
    for k in 2..=k_max.max(2) {
        let z = zeta_reference(Complex64::new(k as f64, 0.0)).expect("k ≥ 2");
        values.push(1.0 / z);
        provenance.push(Provenance::DirectSeries);
    }
    DirichletSamples::new(values, provenance).expect("finite samples")
}

/// Newton interpolation of `1/ζ` at `s`, with the full partial-sum trajectory.
pub fn reciprocal_zeta(s: Complex64, policy: &TruncationPolicy) -> ReciprocalZeta {
    let samples = reciprocal_zeta_samples(policy.max_terms().saturating_sub(1));
    let coeffs = newton_coefficients(samples.values()).expect("validated samples");
    let outcome = newton_eval(&coeffs, s, policy);
    let mut partial_sums = Vec::with_capacity(coeffs.len());
    let mut acc = Complex64::new(0.0, 0.0);
    for (c, p) in coeffs.values().iter().zip(PochhammerNewtonSeq::new(s)) {
        acc += c * p;
        partial_sums.push(acc);
    }
    ReciprocalZeta {
        outcome,
        partial_sums,
        experimental: true,
    }
}

/// `ζ(s + 1 + ε)` interpolated from `ζ(k + 1 + ε)`, `k = 0, 1, …`.
pub fn zeta_shifted(
    s: Complex64,
    eps: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesOutcome<Complex64>> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::domain(format!("ε must be positive, got {eps}")));
    }
    let k_max = policy.max_terms().saturating_sub(1).max(2);
    let values = (0..=k_max)
        .map(|k| zeta_reference(Complex64::new(k as f64 + 1.0 + eps, 0.0)))
        .collect::<Result<Vec<_>>>()?;
    let samples = DirichletSamples::new(values, vec![Provenance::DirectSeries; k_max + 1])?;
    Ok(dirichlet_newton_interpolate(&samples, s, policy))
}

/// `Γ(s) · g(s)` where `g` interpolates `g(k) = M[f](k)/Γ(k)`.
///
/// `M[f](0)` is a pole of the Mellin transform for most `f`; entry 0 of the samples must
/// hold `lim_{s→0} M[f](s)/Γ(s)` (the residue at 0), which is 0 when `M[f]` is regular there.
pub fn mellin_interpolate(
    mellin_samples: &DirichletSamples,
    s: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesOutcome<Complex64>> {
    if s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 {
        return Err(Error::GammaPole { s });
    }
    let g: Vec<Complex64> = mellin_samples
        .values()
        .iter()
        .enumerate()
        .map(|(k, &m)| if k == 0 { m } else { m / gamma(Complex64::new(k as f64, 0.0)) })
        .collect();
    let coeffs = newton_coefficients(&g)?;
    let gamma_s = gamma(s);
    let mut out = newton_eval(&coeffs, s, policy);
    // at an integer node Γ(s)·g(s) is the sample itself
    if let Some(k) = as_nonnegative_integer(s, 0.0) {
        if out.stop == crate::truncation::StopReason::Exact && k > 0 {
            out.value = mellin_samples.values()[k as usize];
            return Ok(out);
        }
    }
    out.tail_estimate *= gamma_s.norm();
    Ok(out.map(|v| v * gamma_s))
}
