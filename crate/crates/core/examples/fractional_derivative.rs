//! Fractional derivatives: the closed form for sines and cosines, Fourier-series
//! multipliers for periodic samples and the FFT route for decaying samples.

use fracterp::frac_calculus::{
    frac_derivative_fourier_series, frac_derivative_fourier_transform, frac_derivative_trig,
    NegativeFrequencyBranch, SampledSignal, TrigKind,
};
use std::f64::consts::{FRAC_PI_4, PI};

fn main() -> fracterp::Result<()> {
    let d = frac_derivative_trig(1.0, TrigKind::Sin, 0.5)?;
    println!("D^(1/2) sin x = {:.6} sin(x + {:.6})  (π/4 = {FRAC_PI_4:.6})", d.amplitude, d.phase_shift);

    // one period [0, 2π], both endpoints sampled
    let f = SampledSignal::from_real_fn(0.0, 2.0 * PI, 257, |x| (3.0 * x).sin())?;
    for branch in [NegativeFrequencyBranch::ImaginaryAxis, NegativeFrequencyBranch::PrincipalProduct] {
        let out = frac_derivative_fourier_series(&f, 0.5, branch)?;
        let want = frac_derivative_trig(3.0, TrigKind::Sin, 0.5)?;
        let err = f
            .grid()
            .iter()
            .zip(out.values())
            .map(|(&x, v)| (v - want.eval(x)).norm())
            .fold(0.0, f64::max);
        println!("Fourier series, {branch:?}: max deviation from the closed form {err:.2e}");
    }

    // a Gaussian through the FFT route; α = 1 recovers the ordinary derivative
    let g = SampledSignal::from_real_fn(-10.0, 10.0, 1025, |x| (-x * x).exp())?;
    let d1 = frac_derivative_fourier_transform(&g, 1.0, NegativeFrequencyBranch::ImaginaryAxis)?;
    let err = g
        .grid()
        .iter()
        .zip(d1.values())
        .map(|(&x, v)| (v.re + 2.0 * x * (-x * x).exp()).abs())
        .fold(0.0, f64::max);
    println!("FFT route at α = 1: max error against −2x e^(−x²) {err:.2e}");
    // D^(1/2) e^(−x²) at 0 equals Γ(3/4)/√π. The half derivative decays only like
    // −x^(−3/2)/2 on the right, so the periodic images left by the FFT shrink slowly
    // with the window width.
    let exact = fracterp::special::gamma_real(0.75) / PI.sqrt();
    for half_width in [10.0, 40.0, 160.0] {
        let m = (128.0 * half_width) as usize + 1;
        let g = SampledSignal::from_real_fn(-half_width, half_width, m, |x| (-x * x).exp())?;
        let d = frac_derivative_fourier_transform(&g, 0.5, NegativeFrequencyBranch::ImaginaryAxis)?;
        let mid = d.values()[m / 2];
        println!(
            "D^(1/2) e^(−x²) at 0 on [−{half_width}, {half_width}]: {:.8} (exact {exact:.8}, error {:.1e})",
            mid.re,
            (mid.re - exact).abs()
        );
    }
    Ok(())
}
