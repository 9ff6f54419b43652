//! The Riemann zeta function from its values at integers: Newton interpolation of
//! `k ↦ η(k+1)`, of shifted samples `ζ(k+1+ε)`, and the experimental `1/ζ` route.

use fracterp::dirichlet_interp::{
    default_dirichlet_policy, reciprocal_zeta, zeta_reference, zeta_shifted, zeta_via_eta,
};
use fracterp::Complex64;

fn main() -> fracterp::Result<()> {
    let policy = default_dirichlet_policy();
    for s in [Complex64::new(2.0, 0.0), Complex64::new(1.5, 0.0), Complex64::new(2.5, 1.0), Complex64::new(0.5, 0.0)] {
        let out = zeta_via_eta(s, &policy)?;
        let reference = zeta_reference(s)?;
        println!(
            "ζ({s}) ≈ {:.12}  error {:.1e}  terms {:>2}  {:?}",
            out.value,
            (out.value - reference).norm(),
            out.terms_used,
            out.stop
        );
    }

    // samples ζ(k+1+ε) evaluated at s give ζ(s+1+ε); the pole at 1 sits ε to the left of
    // the first node, so these coefficients decay slowly
    for (s, eps) in [(0.5, 0.5), (1.5, 1.0)] {
        let out = zeta_shifted(Complex64::new(s, 0.0), eps, &policy)?;
        let target = Complex64::new(s + 1.0 + eps, 0.0);
        let err = (out.value - zeta_reference(target)?).norm();
        println!("shifted ε = {eps}: ζ({}) error {err:.2e} after {} terms ({:?})", target.re, out.terms_used, out.stop);
    }

    let r = reciprocal_zeta(Complex64::new(2.0, 0.0), &policy);
    println!(
        "experimental 1/ζ(2) ≈ {:.6} (6/π² = {:.6}), last partial sums {:?}",
        r.outcome.value.re,
        6.0 / (std::f64::consts::PI * std::f64::consts::PI),
        r.partial_sums.iter().rev().take(3).map(|z| (z.re * 1e6).round() / 1e6).collect::<Vec<_>>()
    );
    Ok(())
}
