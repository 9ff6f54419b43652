//! Recovering `Γ(s) g(s)` from Mellin-transform samples at the integers. For
//! `f(x) = e^{-x}` the transform is `Γ(s)`, so the interpolant of `M[f](k)/Γ(k)` is 1.

use fracterp::dirichlet_interp::{mellin_interpolate, DirichletSamples};
use fracterp::special::gamma;
use fracterp::{Complex64, TruncationPolicy};

fn main() -> fracterp::Result<()> {
    let policy = TruncationPolicy::new(40, 1e-13, 3)?;

    // M[e^{-x}](k) = Γ(k) = (k−1)!; entry 0 holds the residue of Γ at 0, which is 1
    let samples = DirichletSamples::from_closed_form(30, |k| {
        if k == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            gamma(Complex64::new(k as f64, 0.0))
        }
    })?;
    for s in [Complex64::new(0.5, 0.0), Complex64::new(2.5, 0.0), Complex64::new(1.0, 1.0)] {
        let out = mellin_interpolate(&samples, s, &policy)?;
        println!("M[e^(-x)]({s}) ≈ {:.12}  Γ(s) = {:.12}", out.value, gamma(s));
    }

    // M[e^{-2x}](s) = 2^{-s} Γ(s)
    let samples = DirichletSamples::from_closed_form(30, |k| {
        if k == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            gamma(Complex64::new(k as f64, 0.0)) * 0.5f64.powi(k as i32)
        }
    })?;
    let s = Complex64::new(0.5, 0.0);
    let out = mellin_interpolate(&samples, s, &policy)?;
    println!("M[e^(-2x)](1/2) ≈ {:.12}  exact {:.12}", out.value.re, (std::f64::consts::PI / 2.0).sqrt());
    Ok(())
}
