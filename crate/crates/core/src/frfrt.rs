//! Fractional Fourier transforms on a centered sample grid, and the sinc-series powers of
//! the unit translation.
//!
//! The alternate transform is the order-4 periodic power of the unitary DFT,
//! `w₀ f + w₁ F f + w₂ F² f + w₃ F³ f`; the chirp transform discretizes the usual
//! rotation-angle integral kernel.

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{Error, Result};
use crate::interp_core::{periodic_power_weights, sinc};

/// Samples on the centered grid `x_j = (j − c)·step`, `c = ⌊M/2⌋`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Signal {
    samples: Vec<Complex64>,
    step: f64,
}

impl Signal {
    pub fn new(samples: Vec<Complex64>, step: f64) -> Result<Self> {
        if samples.len() < 4 {
            return Err(Error::domain("a signal needs at least four samples"));
        }
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::domain(format!("grid step must be positive, got {step}")));
        }
        if samples.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::domain("samples must be finite"));
        }
        Ok(Self { samples, step })
    }

    pub fn from_fn(m: usize, step: f64, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let c = (m / 2) as f64;
        Self::new((0..m).map(|j| f((j as f64 - c) * step)).collect(), step)
    }

    pub fn from_real_fn(m: usize, step: f64, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::from_fn(m, step, |x| Complex64::new(f(x), 0.0))
    }

    /// The grid with `M · step² = 1`, on which the chirp transform at `π/2` equals the DFT.
    pub fn natural_step(m: usize) -> f64 {
        1.0 / (m as f64).sqrt()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn center(&self) -> usize {
        self.samples.len() / 2
    }

    pub fn x(&self, j: usize) -> f64 {
        (j as f64 - self.center() as f64) * self.step
    }

    pub fn grid(&self) -> Vec<f64> {
        (0..self.len()).map(|j| self.x(j)).collect()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    fn with_samples(&self, samples: Vec<Complex64>) -> Self {
        Self {
            samples,
            step: self.step,
        }
    }

    /// Discrete L² norm `(Σ |f_j|² step)^{1/2}`.
    pub fn l2_norm(&self) -> f64 {
        (self.samples.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.step).sqrt()
    }

    pub fn l2_distance(&self, other: &Signal) -> f64 {
        (self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(u, v)| (u - v).norm_sqr())
            .sum::<f64>()
            * self.step)
            .sqrt()
    }

    /// `‖self − other‖ / ‖other‖`.
    pub fn relative_distance(&self, other: &Signal) -> f64 {
        self.l2_distance(other) / other.l2_norm()
    }

    pub fn sup_distance(&self, other: &Signal) -> f64 {
        self.samples
            .iter()
            .zip(&other.samples)
            .map(|(u, v)| (u - v).norm())
            .fold(0.0, f64::max)
    }

    fn combine(&self, weights: &[Complex64], parts: &[&Signal]) -> Signal {
        let mut out = vec![Complex64::new(0.0, 0.0); self.len()];
        for (w, part) in weights.iter().zip(parts) {
            if *w == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (o, v) in out.iter_mut().zip(&part.samples) {
                *o += w * v;
            }
        }
        self.with_samples(out)
    }
}

/// Unitary DFT on the centered grid: `(F f)_q = M^{−1/2} Σ_p f_p e^{−2πi pq/M}` with
/// positions `p, q ∈ [−c, M − 1 − c]`. `F² = P` and `F⁴ = I`.
pub fn centered_dft(f: &Signal) -> Signal {
    dft_with_direction(f, false)
}

/// `F⁻¹ = F³ = P F`.
pub fn centered_inverse_dft(f: &Signal) -> Signal {
    dft_with_direction(f, true)
}

fn dft_with_direction(f: &Signal, inverse: bool) -> Signal {
    let m = f.len();
    let c = f.center();
    let mut buf: Vec<Complex64> = (0..m).map(|k| f.samples[(k + c) % m]).collect();
    let mut planner = FftPlanner::new();
    let plan = if inverse {
        planner.plan_fft_inverse(m)
    } else {
        planner.plan_fft_forward(m)
    };
    plan.process(&mut buf);
    let scale = 1.0 / (m as f64).sqrt();
    let out = (0..m).map(|j| buf[(j + m - c) % m] * scale).collect();
    f.with_samples(out)
}

/// Index reversal about the grid center, `(P f)(x) = f(−x)` (mod `M`).
pub fn parity(f: &Signal) -> Signal {
    let m = f.len();
    let c2 = 2 * f.center();
    let out = (0..m).map(|j| f.samples[(c2 + m - j) % m]).collect();
    f.with_samples(out)
}

/// The four weights of the alternate transform, `(w₀, w₁, w₂, w₃)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrftWeights {
    pub alpha: f64,
    pub w: [Complex64; 4],
}

impl FrftWeights {
    /// `Σ w_n λ^n`.
    pub fn multiplier(&self, lambda: Complex64) -> Complex64 {
        let mut pow = Complex64::new(1.0, 0.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for w in self.w {
            acc += w * pow;
            pow *= lambda;
        }
        acc
    }
}

pub fn alt_frft_weights(alpha: f64) -> FrftWeights {
    let p = periodic_power_weights(4, alpha);
    FrftWeights {
        alpha,
        w: [0, 1, 2, 3].map(|n| Complex64::new(p.weights[n], 0.0)),
    }
}

/// Output of [`alt_frft`].
#[derive(Debug, Clone, Serialize)]
pub struct AltFrft {
    pub signal: Signal,
    pub weights: FrftWeights,
    /// `‖Π f‖ / ‖f‖` with `Π` the projector onto the DFT's −1 eigenspace. On that part the
    /// transform multiplies by `cos(πα)`, so it is neither unitary nor additive there.
    pub minus_one_fraction: f64,
}

/// `w₀ f + w₁ F f + w₂ P f + w₃ P F f`; integer orders return `F^{α mod 4} f` exactly.
pub fn alt_frft(f: &Signal, alpha: f64) -> Result<AltFrft> {
    if !alpha.is_finite() {
        return Err(Error::domain("α must be finite"));
    }
    let weights = alt_frft_weights(alpha);
    let ff = centered_dft(f);
    let pf = parity(f);
    let pff = parity(&ff);
    let minus_one = f.combine(
        &[0.25, -0.25, 0.25, -0.25].map(|w| Complex64::new(w, 0.0)),
        &[f, &ff, &pf, &pff],
    );
    let norm = f.l2_norm();
    let minus_one_fraction = if norm > 0.0 {
        minus_one.l2_norm() / norm
    } else {
        0.0
    };
    if minus_one_fraction > 1e-8 {
        log::info!(
            "alt_frft: input has a −1-eigenspace component of relative size {minus_one_fraction:.3e}; \
             the transform scales it by cos(πα) = {:.6}",
            (PI * alpha).cos()
        );
    }
    let signal = if alpha.fract() == 0.0 {
        match (alpha as i64).rem_euclid(4) {
            0 => f.clone(),
            1 => ff,
            2 => pf,
            _ => pff,
        }
    } else {
        f.combine(&weights.w, &[f, &ff, &pf, &pff])
    };
    Ok(AltFrft {
        signal,
        weights,
        minus_one_fraction,
    })
}

/// `Π f = (f − F f + F² f − F³ f)/4`, the component in the DFT's −1 eigenspace.
pub fn minus_one_projection(f: &Signal) -> Signal {
    let ff = centered_dft(f);
    let pf = parity(f);
    let pff = parity(&ff);
    f.combine(
        &[0.25, -0.25, 0.25, -0.25].map(|w| Complex64::new(w, 0.0)),
        &[f, &ff, &pf, &pff],
    )
}

const DEGENERATE_SIN: f64 = 1e-6;

/// Chirp–convolve–chirp quadrature of
/// `√(1 − i cot φ) e^{iπ cot φ u²} ∫ e^{−2πi csc φ ux + iπ cot φ x²} f(x) dx`
/// on the signal's own grid. Accurate for `|cot φ| ≤ 1`; see [`literature_frft`] for
/// other angles.
pub fn chirp_frft(f: &Signal, phi: f64) -> Result<Signal> {
    let (s, c) = phi.sin_cos();
    if s.abs() < DEGENERATE_SIN {
        return Err(Error::DegenerateAngle { phi });
    }
    let cot = c / s;
    let csc = 1.0 / s;
    let m = f.len();
    let dx = f.step();
    let x = f.grid();
    let outer = cot - csc;
    let amp = (Complex64::new(1.0, -cot)).sqrt() * dx;
    let chirped: Vec<Complex64> = x
        .iter()
        .zip(&f.samples)
        .map(|(&xj, v)| v * Complex64::from_polar(1.0, PI * outer * xj * xj))
        .collect();
    // linear convolution with e^{iπ csc d²}, d = (j − i)·dx, through a zero-padded FFT
    let size = (2 * m).next_power_of_two();
    let mut kernel = vec![Complex64::new(0.0, 0.0); size];
    for d in 0..m {
        let t = d as f64 * dx;
        let v = Complex64::from_polar(1.0, PI * csc * t * t);
        kernel[d] = v;
        if d > 0 {
            kernel[size - d] = v;
        }
    }
    let mut data = vec![Complex64::new(0.0, 0.0); size];
    data[..m].copy_from_slice(&chirped);
    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(size);
    fwd.process(&mut kernel);
    fwd.process(&mut data);
    for (a, b) in data.iter_mut().zip(&kernel) {
        *a *= b;
    }
    planner.plan_fft_inverse(size).process(&mut data);
    let norm = 1.0 / size as f64;
    let out = (0..m)
        .map(|j| data[j] * norm * Complex64::from_polar(1.0, PI * outer * x[j] * x[j]) * amp)
        .collect();
    Ok(f.with_samples(out))
}

/// Rotation-angle fractional Fourier transform.
///
/// Angles within 1e-6 (in `|sin φ|`) of `0` or `π` return the identity or parity exactly.
/// Otherwise `φ` is moved into `|cot φ| ≤ 1` by composing with the chirp transform at
/// `±π/2` (`F_φ = F_{φ∓π/2} ∘ F_{±π/2}`), where the chirp discretization is well sampled.
pub fn literature_frft(f: &Signal, phi: f64) -> Result<Signal> {
    if !phi.is_finite() {
        return Err(Error::domain("φ must be finite"));
    }
    // reduce to (−π, π]
    let mut p = phi.rem_euclid(2.0 * PI);
    if p > PI {
        p -= 2.0 * PI;
    }
    if p.sin().abs() < DEGENERATE_SIN {
        return Ok(if p.abs() < FRAC_PI_2 { f.clone() } else { parity(f) });
    }
    let a = p.abs();
    if (FRAC_PI_4..=3.0 * FRAC_PI_4).contains(&a) {
        return chirp_frft(f, p);
    }
    let quarter = if (a < FRAC_PI_4) == (p > 0.0) { -FRAC_PI_2 } else { FRAC_PI_2 };
    // for |φ| < π/4 step away from 0, for |φ| > 3π/4 step back toward ±π/2
    let first = chirp_frft(f, quarter)?;
    chirp_frft(&first, p - quarter)
}

/// Report of the translation examples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TranslationReport {
    pub t: f64,
    pub k: usize,
    /// Samples per unit length on `[−8, 8]`.
    pub grid: usize,
    /// `max |value|` on grid points of the open interval `(1/2, 1)`.
    pub max_on_interval: f64,
    /// Discrete L² distance to the true shift.
    pub l2_error: f64,
    /// `max |value|` of the true shift `χ_{[t, t+1/2]}` on the same grid points.
    pub true_shift_on_interval: f64,
}

fn box_indicator(lo: f64, hi: f64, x: f64) -> f64 {
    if x >= lo && x <= hi {
        1.0
    } else {
        0.0
    }
}

/// Grid on `[−8, 8]` with `grid` points per unit.
fn counterexample_grid(grid: usize) -> Result<Signal> {
    if grid == 0 {
        return Err(Error::domain("grid must be positive"));
    }
    let m = 16 * grid + 1;
    Signal::from_real_fn(m, 1.0 / grid as f64, |_| 0.0)
}

/// `Σ_{|n|≤64} sinc(t − n) χ_{[n, n+1/2]}` on `[−8, 8]`: the sinc power `(T₁)^t` of the unit
/// translation applied to `χ_{[0,1/2]}`. Returns the report and the sampled profile.
pub fn translation_counterexample(t: f64, grid: usize) -> Result<(TranslationReport, Signal)> {
    if !t.is_finite() {
        return Err(Error::domain("t must be finite"));
    }
    let base = counterexample_grid(grid)?;
    let weights: Vec<(f64, f64)> = (-64..=64).map(|n| (n as f64, sinc(t - n as f64))).collect();
    let values: Vec<Complex64> = base
        .grid()
        .iter()
        .map(|&x| {
            let v: f64 = weights
                .iter()
                .filter(|(_, w)| *w != 0.0)
                .map(|&(n, w)| w * box_indicator(n, n + 0.5, x))
                .sum();
            Complex64::new(v, 0.0)
        })
        .collect();
    let profile = base.with_samples(values);
    let truth = Signal::from_real_fn(base.len(), base.step(), |x| box_indicator(t, t + 0.5, x))?;
    let max_on_interval = profile
        .grid()
        .iter()
        .zip(profile.samples())
        .filter(|(&x, _)| x > 0.5 && x < 1.0)
        .map(|(_, v)| v.norm())
        .fold(0.0, f64::max);
    let true_shift_on_interval = truth
        .grid()
        .iter()
        .zip(truth.samples())
        .filter(|(&x, _)| x > 0.5 && x < 1.0)
        .map(|(_, v)| v.norm())
        .fold(0.0, f64::max);
    Ok((
        TranslationReport {
            t,
            k: 1,
            grid,
            max_on_interval,
            l2_error: profile.l2_distance(&truth),
            true_shift_on_interval,
        },
        profile,
    ))
}

/// `Σ_n sinc(kt − n) f(· − n/k)`, the sinc power `(T_{1/k})^{kt}` of the translation by
/// `1/k`. Shifted copies are zero outside the grid; every shift that still overlaps the
/// grid is included, symmetrically in `n`.
pub fn refined_translation_power(f: &Signal, t: f64, k: usize) -> Result<Signal> {
    if k == 0 {
        return Err(Error::domain("k must be positive"));
    }
    if !t.is_finite() {
        return Err(Error::domain("t must be finite"));
    }
    let ratio = 1.0 / (k as f64 * f.step());
    let shift = ratio.round();
    if shift < 1.0 || (ratio - shift).abs() > 1e-9 * ratio {
        return Err(Error::GridMismatch(format!(
            "shift 1/{k} is not a whole number of grid steps (step {})",
            f.step()
        )));
    }
    let s = shift as i64;
    let m = f.len() as i64;
    let kt = k as f64 * t;
    let n_max = (m - 1) / s + 1;
    let mut out = vec![Complex64::new(0.0, 0.0); f.len()];
    for n in -n_max..=n_max {
        let w = sinc(kt - n as f64);
        if w == 0.0 {
            continue;
        }
        let offset = n * s;
        for (j, o) in out.iter_mut().enumerate() {
            let src = j as i64 - offset;
            if (0..m).contains(&src) {
                *o += f.samples[src as usize] * w;
            }
        }
    }
    Ok(f.with_samples(out))
}

/// One row of a long-form plotting table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileRow {
    pub x: f64,
    pub re: f64,
    pub im: f64,
    pub series: String,
}

pub fn profile_rows(signal: &Signal, label: &str) -> Vec<ProfileRow> {
    signal
        .grid()
        .into_iter()
        .zip(signal.samples())
        .map(|(x, v)| ProfileRow {
            x,
            re: v.re,
            im: v.im,
            series: label.to_string(),
        })
        .collect()
}

/// The unit box `χ_{[−1/2, 1/2]}` on `m` points of the natural grid.
pub fn unit_box(m: usize) -> Result<Signal> {
    Signal::from_real_fn(m, Signal::natural_step(m), |x| box_indicator(-0.5, 0.5, x))
}

/// Profiles of the unit box under both transforms (three figure panels, `m` samples):
/// the alternate transform at `α = 1/2`, the chirp transform at `φ = π/2` and `π/4`, and
/// both at small order (`α = 1/50`, `φ = π/100`).
pub fn figure_profiles(m: usize) -> Result<Vec<ProfileRow>> {
    let b = unit_box(m)?;
    let mut rows = profile_rows(&b, "box");
    rows.extend(profile_rows(&alt_frft(&b, 0.5)?.signal, "alt_alpha_0.5"));
    rows.extend(profile_rows(&literature_frft(&b, FRAC_PI_2)?, "chirp_phi_pi_over_2"));
    rows.extend(profile_rows(&literature_frft(&b, FRAC_PI_4)?, "chirp_phi_pi_over_4"));
    rows.extend(profile_rows(&alt_frft(&b, 0.02)?.signal, "alt_alpha_0.02"));
    rows.extend(profile_rows(&literature_frft(&b, PI / 100.0)?, "chirp_phi_pi_over_100"));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn test_signal(m: usize) -> Signal {
        Signal::from_fn(m, 0.1, |x| Complex64::new((-x * x).exp() + 0.3 * x, (2.0 * x).sin()))
            .unwrap()
    }

    #[test]
    fn dft_matches_direct_sum() {
        for m in [8usize, 9] {
            let f = test_signal(m);
            let got = centered_dft(&f);
            let cidx = f.center() as f64;
            for q in 0..m {
                let mut acc = c(0.0);
                for p in 0..m {
                    let angle = -2.0 * PI * (p as f64 - cidx) * (q as f64 - cidx) / m as f64;
                    acc += f.samples()[p] * Complex64::from_polar(1.0, angle);
                }
                acc /= (m as f64).sqrt();
                assert!((got.samples()[q] - acc).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn dft_group_relations() {
        for m in [8usize, 9, 16] {
            let f = test_signal(m);
            let f2 = centered_dft(&centered_dft(&f));
            assert!(f2.sup_distance(&parity(&f)) < 1e-13);
            let f4 = centered_dft(&centered_dft(&f2));
            assert!(f4.sup_distance(&f) < 1e-13);
            assert!(centered_inverse_dft(&centered_dft(&f)).sup_distance(&f) < 1e-13);
            assert_eq!(parity(&parity(&f)), f);
        }
    }

    #[test]
    fn weights_examples() {
        assert_eq!(alt_frft_weights(1.0).w.map(|w| w.re), [0.0, 1.0, 0.0, 0.0]);
        let w = alt_frft_weights(0.5);
        let want = [0.60355, 0.60355, -0.10355, -0.10355];
        for (g, t) in w.w.iter().zip(want) {
            assert!((g.re - t).abs() < 1e-5);
        }
        let w2 = alt_frft_weights(2.0).w.map(|w| w.re);
        assert!(w2[0].abs() < 1e-15 && w2[1].abs() < 1e-15 && (w2[2] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn alt_integer_orders() {
        let f = test_signal(10);
        assert_eq!(alt_frft(&f, 0.0).unwrap().signal, f);
        assert_eq!(alt_frft(&f, 1.0).unwrap().signal, centered_dft(&f));
        assert_eq!(alt_frft(&f, 2.0).unwrap().signal, parity(&f));
        assert!(alt_frft(&f, 3.0).unwrap().signal.sup_distance(&centered_inverse_dft(&f)) < 1e-13);
        assert_eq!(alt_frft(&f, 4.0).unwrap().signal, f);
        assert_eq!(alt_frft(&f, -1.0).unwrap().signal, alt_frft(&f, 3.0).unwrap().signal);
    }

    #[test]
    fn minus_one_component_reported() {
        // an even Hermite-like function with eigenvalue +1 has no −1 component
        let m = 64;
        let g = Signal::from_real_fn(m, Signal::natural_step(m), |x| (-PI * x * x).exp()).unwrap();
        assert!(alt_frft(&g, 0.3).unwrap().minus_one_fraction < 1e-10);
        let f = test_signal(m);
        let pi_f = minus_one_projection(&f);
        assert!(centered_dft(&pi_f).sup_distance(&pi_f.with_samples(pi_f.samples().iter().map(|v| -v).collect())) < 1e-12);
    }

    #[test]
    fn chirp_matches_dft_on_natural_grid() {
        let m = 64;
        let f = Signal::from_fn(m, Signal::natural_step(m), |x| {
            Complex64::new((-x * x).exp(), 0.2 * x * (-x * x).exp())
        })
        .unwrap();
        let chirp = chirp_frft(&f, FRAC_PI_2).unwrap();
        assert!(chirp.sup_distance(&centered_dft(&f)) < 1e-12);
        let back = chirp_frft(&f, -FRAC_PI_2).unwrap();
        assert!(back.sup_distance(&centered_inverse_dft(&f)) < 1e-12);
    }

    #[test]
    fn literature_limits_and_gaussian() {
        let m = 1024;
        let g = Signal::from_real_fn(m, Signal::natural_step(m), |x| (-PI * x * x).exp()).unwrap();
        assert_eq!(literature_frft(&g, 0.0).unwrap(), g);
        assert_eq!(literature_frft(&g, 2.0 * PI).unwrap(), g);
        assert_eq!(literature_frft(&g, PI).unwrap(), parity(&g));
        assert!(matches!(chirp_frft(&g, 0.0), Err(Error::DegenerateAngle { .. })));
        for phi in [FRAC_PI_2, 0.3, 1.0, 2.0, 2.9, -0.7, -2.5] {
            let r = literature_frft(&g, phi).unwrap();
            assert!(r.sup_distance(&g) < 2e-3, "φ = {phi}: {}", r.sup_distance(&g));
        }
    }

    #[test]
    fn literature_additivity() {
        let m = 512;
        let f = Signal::from_fn(m, Signal::natural_step(m), |x| {
            Complex64::new((-PI * (x - 0.5) * (x - 0.5)).exp(), 0.0)
        })
        .unwrap();
        let a = literature_frft(&literature_frft(&f, 0.4).unwrap(), 0.5).unwrap();
        let b = literature_frft(&f, 0.9).unwrap();
        assert!(a.sup_distance(&b) < 1e-6, "{}", a.sup_distance(&b));
    }

    #[test]
    fn counterexample_examples() {
        let (r, profile) = translation_counterexample(0.5, 64).unwrap();
        assert_eq!(r.max_on_interval, 0.0);
        assert_eq!(r.true_shift_on_interval, 1.0);
        let j = profile.grid().iter().position(|&x| x == 0.25).unwrap();
        assert!((profile.samples()[j].re - 2.0 / PI).abs() < 1e-15);
        let (r, profile) = translation_counterexample(1.0, 64).unwrap();
        assert_eq!(r.l2_error, 0.0);
        let j = profile.grid().iter().position(|&x| x == 1.25).unwrap();
        assert_eq!(profile.samples()[j], c(1.0));
    }

    #[test]
    fn refined_power_examples() {
        let f = Signal::from_real_fn(1025, 1.0 / 64.0, |x| (-PI * x * x).exp()).unwrap();
        let r = refined_translation_power(&f, 0.375, 8).unwrap();
        let want = Signal::from_real_fn(1025, 1.0 / 64.0, |x| (-PI * (x - 0.375) * (x - 0.375)).exp())
            .unwrap();
        assert!(r.sup_distance(&want) < 1e-12);
        assert!(matches!(
            refined_translation_power(&f, 0.5, 3),
            Err(Error::GridMismatch(_))
        ));
    }
}
