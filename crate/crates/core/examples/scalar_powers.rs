//! Fractional powers of a scalar from its integer powers: the Newton series of `k ↦ x^k`
//! inside `B(1, 1)` and the sinc series of `n ↦ e^{inθ}` on the unit circle.

use fracterp::interp_core::{newton_eval_power, shannon_eval_power};
use fracterp::{Complex64, TruncationPolicy};

fn main() -> fracterp::Result<()> {
    let policy = TruncationPolicy::new(400, 1e-15, 3)?;
    println!("Newton series for x^(1/2):");
    for x in [0.25, 0.5, 1.0, 1.5, 1.8] {
        let out = newton_eval_power(Complex64::new(x, 0.0), Complex64::new(0.5, 0.0), &policy)?;
        println!(
            "  x = {x:<4}  series {:.15}  sqrt {:.15}  terms {:>3}  stop {:?}",
            out.value.re,
            f64::sqrt(x),
            out.terms_used,
            out.stop
        );
    }

    let z = Complex64::new(0.7, 0.4);
    let alpha = Complex64::new(0.3, -0.2);
    let out = newton_eval_power(z, alpha, &policy)?;
    println!("complex base and exponent: {:.12}  vs powc {:.12}", out.value, z.powc(alpha));

    println!("sinc series for e^(iαθ), α = 0.4 (slow O(1/N) convergence):");
    for terms in [11, 101, 1001, 10001] {
        let p = TruncationPolicy::new(terms, 0.0, 1)?;
        let out = shannon_eval_power(1.0, 0.4, &p)?;
        let err = (out.value - Complex64::from_polar(1.0, 0.4)).norm();
        println!("  {terms:>6} terms  error {err:.3e}");
    }
    let at_pi = shannon_eval_power(std::f64::consts::PI, 0.4, &TruncationPolicy::new(20001, 0.0, 1)?)?;
    println!("at θ = π the series tends to cos(πα): {:.6} vs {:.6}", at_pi.value.re, (0.4 * std::f64::consts::PI).cos());
    Ok(())
}
