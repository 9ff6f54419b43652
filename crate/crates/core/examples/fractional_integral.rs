//! Fractional integrals `J^α f` on `[0, 1]` from the Newton series of the discrete
//! cumulative integral, compared with the product-trapezoid Riemann–Liouville quadrature.

use fracterp::frac_calculus::{newton_fractional_integral, riemann_liouville, SampledSignal};
use fracterp::special::gamma_real;
use fracterp::{Complex64, TruncationPolicy};

fn main() -> fracterp::Result<()> {
    let f = SampledSignal::from_real_fn(0.0, 1.0, 1025, |x| x)?;
    let policy = TruncationPolicy::new(64, 1e-12, 3)?;
    for alpha in [0.25, 0.5, 1.5] {
        let a = Complex64::new(alpha, 0.0);
        let newton = newton_fractional_integral(&f, a, &policy)?;
        let rl = riemann_liouville(&f, a)?;
        // J^α x = x^{1+α} / Γ(2+α)
        let exact = SampledSignal::from_real_fn(0.0, 1.0, 1025, |x| x.powf(1.0 + alpha) / gamma_real(2.0 + alpha))?;
        println!(
            "α = {alpha:<4}  Newton ({} terms, {:?}) sup error {:.2e}   RL sup error {:.2e}",
            newton.terms_used,
            newton.stop,
            newton.value.sup_distance(&exact),
            rl.sup_distance(&exact)
        );
    }

    // constants are the hard case: J^α 1 = x^α/Γ(1+α) has a singular derivative at 0
    let one = SampledSignal::from_real_fn(0.0, 1.0, 1025, |_| 1.0)?;
    let half = Complex64::new(0.5, 0.0);
    let newton = newton_fractional_integral(&one, half, &policy)?;
    let exact = SampledSignal::from_real_fn(0.0, 1.0, 1025, |x| x.sqrt() / gamma_real(1.5))?;
    println!("J^(1/2) 1: Newton sup error {:.2e} after {} terms", newton.value.sup_distance(&exact), newton.terms_used);
    Ok(())
}
