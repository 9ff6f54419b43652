//! Fractional integrals and derivatives of uniformly sampled functions.
//!
//! The fractional integral applies the Newton operator series to the trapezoidal
//! integration operator `J` (its spectrum collapses to 0, so `ρ = 1` already places it in
//! `B(1, 1)`). A product-integration Riemann–Liouville quadrature is the reference.
//! Derivatives use Fourier multipliers.

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::interp_core::newton_operator_series;
use crate::special::{cpow, gamma};
use crate::truncation::{SeriesOutcome, TruncationPolicy};

/// Samples `values[j] = f(a + j h)`, `h = (b − a)/(M − 1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledSignal {
    a: f64,
    b: f64,
    values: Vec<Complex64>,
}

impl SampledSignal {
    pub fn new(a: f64, b: f64, values: Vec<Complex64>) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::domain(format!("need finite a < b, got [{a}, {b}]")));
        }
        if values.len() < 2 {
            return Err(Error::domain("a sampled signal needs at least two samples"));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::domain("samples must be finite"));
        }
        Ok(Self { a, b, values })
    }

    /// Samples `f` at `m` uniform points of `[a, b]`.
    pub fn from_fn(a: f64, b: f64, m: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        if m < 2 {
            return Err(Error::domain("a sampled signal needs at least two samples"));
        }
        let h = (b - a) / (m - 1) as f64;
        Self::new(a, b, (0..m).map(|j| f(a + j as f64 * h)).collect())
    }

    /// Real-valued convenience form of [`SampledSignal::from_fn`].
    pub fn from_real_fn(a: f64, b: f64, m: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::from_fn(a, b, m, |x| Complex64::new(f(x), 0.0))
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn step(&self) -> f64 {
        (self.b - self.a) / (self.values.len() - 1) as f64
    }

    pub fn x(&self, j: usize) -> f64 {
        self.a + j as f64 * self.step()
    }

    pub fn grid(&self) -> Vec<f64> {
        (0..self.len()).map(|j| self.x(j)).collect()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Same grid, new values.
    pub fn with_values(&self, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != self.values.len() {
            return Err(Error::domain("sample count changed"));
        }
        Self::new(self.a, self.b, values)
    }

    /// `max_j |self_j − other_j|`.
    pub fn sup_distance(&self, other: &SampledSignal) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(u, v)| (u - v).norm())
            .fold(0.0, f64::max)
    }
}

/// Cumulative trapezoid rule on a raw sample vector.
fn trapezoid_cumulative(values: &[Complex64], h: f64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(values.len());
    let mut acc = Complex64::new(0.0, 0.0);
    out.push(acc);
    for w in values.windows(2) {
        acc += (w[0] + w[1]) * (0.5 * h);
        out.push(acc);
    }
    out
}

/// `∫_a^x f`, composite trapezoid rule, starting from 0.
pub fn integrate_cumulative(f: &SampledSignal) -> SampledSignal {
    SampledSignal {
        a: f.a,
        b: f.b,
        values: trapezoid_cumulative(&f.values, f.step()),
    }
}

/// `J^α f = Σ_n P_n(α) (I − J)^n f` with `J` the trapezoidal cumulative integral.
pub fn newton_fractional_integral(
    f: &SampledSignal,
    alpha: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesOutcome<SampledSignal>> {
    newton_fractional_integral_scaled(f, alpha, Complex64::new(1.0, 0.0), policy)
}

/// `J^α f = ρ^α Σ_n P_n(α) (I − J/ρ)^n f`; any `ρ` with `Re ρ > 0` keeps the spectrum of
/// the continuum operator (`{0}`) on the boundary of `B(1, 1)`.
pub fn newton_fractional_integral_scaled(
    f: &SampledSignal,
    alpha: Complex64,
    rho: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesOutcome<SampledSignal>> {
    if !(alpha.re > 0.0) || !alpha.im.is_finite() || !alpha.re.is_finite() {
        return Err(Error::domain(format!(
            "fractional integral needs Re α > 0, got {alpha}"
        )));
    }
    if !(rho.norm() > 0.0) || !rho.re.is_finite() || !rho.im.is_finite() {
        return Err(Error::domain("ρ must be finite and nonzero"));
    }
    let h = f.step();
    let inv_rho = 1.0 / rho;
    let series = newton_operator_series(
        f.values.clone(),
        |v: &Vec<Complex64>| {
            let jv = trapezoid_cumulative(v, h);
            v.iter().zip(jv).map(|(x, y)| x - y * inv_rho).collect()
        },
        alpha,
        policy,
    );
    let factor = cpow(rho, alpha);
    Ok(series.map(|values| SampledSignal {
        a: f.a,
        b: f.b,
        values: values.into_iter().map(|v| v * factor).collect(),
    }))
}

/// `k^p` for an integer `k ≥ 0`; real exponents go through `powf` to keep the weight
/// differences below accurate.
fn grid_pow(k: usize, p: Complex64) -> Complex64 {
    if p.im == 0.0 {
        Complex64::new((k as f64).powf(p.re), 0.0)
    } else {
        cpow(Complex64::new(k as f64, 0.0), p)
    }
}

/// Riemann–Liouville integral `(1/Γ(α)) ∫_a^x f(y) (x − y)^{α−1} dy` by product integration:
/// `f` is linearly interpolated on each cell and the kernel moments are integrated exactly.
pub fn riemann_liouville(f: &SampledSignal, alpha: Complex64) -> Result<SampledSignal> {
    if !(alpha.re > 0.0) || !alpha.re.is_finite() || !alpha.im.is_finite() {
        return Err(Error::domain(format!(
            "Riemann–Liouville integral needs Re α > 0, got {alpha}"
        )));
    }
    let m = f.len();
    let h = f.step();
    let a1 = alpha + 1.0;
    // k^{α+1} and k^α for k = 0..m
    let pow_a1: Vec<Complex64> = (0..=m).map(|k| grid_pow(k, a1)).collect();
    let pow_a: Vec<Complex64> = (0..=m).map(|k| grid_pow(k, alpha)).collect();
    let scale = cpow(Complex64::new(h, 0.0), alpha) / gamma(alpha + 2.0);
    let mut out = vec![Complex64::new(0.0, 0.0); m];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        let mut acc = f.values[0]
            * (pow_a1[n - 1] - (Complex64::new(n as f64 - 1.0, 0.0) - alpha) * pow_a[n]);
        for j in 1..n {
            let d = n - j;
            let w = pow_a1[d + 1] + pow_a1[d - 1] - pow_a1[d] * 2.0;
            acc += f.values[j] * w;
        }
        acc += f.values[n];
        *slot = acc * scale;
    }
    Ok(SampledSignal {
        a: f.a,
        b: f.b,
        values: out,
    })
}

/// Whether a closed-form derivative applies to `sin` or `cos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrigKind {
    Sin,
    Cos,
}

/// `D^α[sin(λx)] = λ^α sin(λx + πα/2)`, and the same with `cos`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrigDerivative {
    pub kind: TrigKind,
    pub lambda: f64,
    pub amplitude: f64,
    pub phase_shift: f64,
}

impl TrigDerivative {
    pub fn eval(&self, x: f64) -> f64 {
        let arg = self.lambda * x + self.phase_shift;
        self.amplitude
            * match self.kind {
                TrigKind::Sin => arg.sin(),
                TrigKind::Cos => arg.cos(),
            }
    }
}

pub fn frac_derivative_trig(lambda: f64, kind: TrigKind, alpha: f64) -> Result<TrigDerivative> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::domain(format!("λ must be positive, got {lambda}")));
    }
    if !alpha.is_finite() {
        return Err(Error::domain("α must be finite"));
    }
    Ok(TrigDerivative {
        kind,
        lambda,
        amplitude: lambda.powf(alpha),
        phase_shift: 0.5 * PI * alpha,
    })
}

/// How `(2πn/L)^α` is continued to negative frequencies `n < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NegativeFrequencyBranch {
    /// `(i·2πn/L)^α` principal: `|ω|^α e^{±iπα/2}`. Real signals stay real and
    /// `D^α sin(λx) = λ^α sin(λx + πα/2)`.
    #[default]
    ImaginaryAxis,
    /// `(2πn/L)^α · e^{iπα/2}` with the principal power of the negative base.
    PrincipalProduct,
}

fn frequency_multiplier(omega: f64, alpha: f64, branch: NegativeFrequencyBranch) -> Complex64 {
    let magnitude = omega.abs().powf(alpha);
    let phase = match branch {
        NegativeFrequencyBranch::ImaginaryAxis => 0.5 * PI * alpha * omega.signum(),
        NegativeFrequencyBranch::PrincipalProduct => {
            0.5 * PI * alpha + if omega < 0.0 { PI * alpha } else { 0.0 }
        }
    };
    Complex64::from_polar(magnitude, phase)
}

/// Index `k` of a length-`n` DFT as a signed frequency in `[−n/2, n/2)`.
fn signed_frequency(k: usize, n: usize) -> f64 {
    if k < n.div_ceil(2) {
        k as f64
    } else {
        k as f64 - n as f64
    }
}

/// Applies a frequency multiplier to `values` through the FFT.
fn apply_multiplier(values: &[Complex64], mult: impl Fn(usize) -> Complex64) -> Vec<Complex64> {
    let n = values.len();
    let mut planner = FftPlanner::new();
    let mut buf = values.to_vec();
    planner.plan_fft_forward(n).process(&mut buf);
    for (k, v) in buf.iter_mut().enumerate() {
        *v *= mult(k);
    }
    planner.plan_fft_inverse(n).process(&mut buf);
    let inv = 1.0 / n as f64;
    buf.iter().map(|v| v * inv).collect()
}

/// Fractional derivative of one period `[a, b)` of a periodic function through its Fourier
/// series. The last sample is taken to repeat the first and is excluded from the transform;
/// it is filled back in periodically on output.
pub fn frac_derivative_fourier_series(
    f: &SampledSignal,
    alpha: f64,
    branch: NegativeFrequencyBranch,
) -> Result<SampledSignal> {
    if !alpha.is_finite() {
        return Err(Error::domain("α must be finite"));
    }
    let period = &f.values[..f.len() - 1];
    let k = period.len();
    if alpha < 0.0 {
        let mean = period.iter().sum::<Complex64>() / k as f64;
        let scale = period.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if mean.norm() > 1e-12 * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::domain(format!(
                "α = {alpha} < 0 needs a zero-mean signal (mean {mean})"
            )));
        }
    }
    let base = 2.0 * PI / (f.b - f.a);
    let mut out = apply_multiplier(period, |idx| {
        let n = signed_frequency(idx, k);
        if n == 0.0 {
            if alpha == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        } else {
            frequency_multiplier(base * n, alpha, branch)
        }
    });
    out.push(out[0]);
    f.with_values(out)
}

/// Fractional derivative of a function decaying at both ends of `[a, b]`, by the continuous
/// Fourier multiplier `(2πi y)^α` realized on the FFT grid.
///
/// For non-integer `α` the result has a slowly decaying tail (`∝ x^{−1−α}` on the side the
/// derivative looks away from), so the periodic images implicit in the FFT bias it by
/// roughly `(b − a)^{−1−α}`.
pub fn frac_derivative_fourier_transform(
    f: &SampledSignal,
    alpha: f64,
    branch: NegativeFrequencyBranch,
) -> Result<SampledSignal> {
    if !alpha.is_finite() {
        return Err(Error::domain("α must be finite"));
    }
    let ends = [f.values[0].norm(), f.values[f.len() - 1].norm()];
    if ends.iter().any(|&e| !(e < 1e-8)) {
        return Err(Error::domain(format!(
            "signal must decay below 1e-8 at both ends (|f(a)| = {}, |f(b)| = {})",
            ends[0], ends[1]
        )));
    }
    if alpha == 0.0 {
        return Ok(f.clone());
    }
    let n = f.len();
    let dy = 1.0 / (n as f64 * f.step());
    let out = apply_multiplier(&f.values, |idx| {
        let y = signed_frequency(idx, n) * dy;
        if y == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            frequency_multiplier(2.0 * PI * y, alpha, branch)
        }
    });
    f.with_values(out)
}
