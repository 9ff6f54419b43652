//! Fractional powers of matrices with the Newton, sinc and periodic engines, checked
//! against the eigendecomposition oracle.

use fracterp::operator_powers::{
    eigen_fractional_power_oracle, newton_matrix_power, periodic_matrix_power, shannon_matrix_power,
    ComplexMatrix, Rho,
};
use fracterp::{Complex64, TruncationPolicy};

fn main() -> fracterp::Result<()> {
    let policy = TruncationPolicy::new(500, 1e-14, 3)?;
    let half = Complex64::new(0.5, 0.0);

    let t = ComplexMatrix::from_real_rows(&[&[1.2, 0.3, 0.0], &[0.1, 0.9, 0.2], &[0.0, 0.4, 1.5]])?;
    let newton = newton_matrix_power(&t, half, Rho::Auto, &policy)?;
    let oracle = eigen_fractional_power_oracle(&t, half)?;
    println!(
        "Newton T^(1/2): ρ = {:.6}, scaled radius {:.4}, {} terms, distance to oracle {:.2e}",
        newton.rho,
        newton.scaled_radius,
        newton.outcome.terms_used,
        newton.outcome.value.distance(&oracle)
    );
    let square = newton.outcome.value.mul(&newton.outcome.value);
    println!("  ‖(T^(1/2))² − T‖ = {:.2e}", square.distance(&t));

    // a spectrum far from 1 needs ρ ≠ 1
    let wide = ComplexMatrix::diagonal(&[Complex64::new(0.05, 0.0), Complex64::new(4.0, 0.0)]);
    let r = newton_matrix_power(&wide, Complex64::new(1.0 / 3.0, 0.0), Rho::Auto, &policy)?;
    println!("diag(0.05, 4)^(1/3) with ρ = {:.4}: {:.10} {:.10}", r.rho.re, r.outcome.value.get(0, 0).re, r.outcome.value.get(1, 1).re);

    // rotation by 1 radian: unitary, so the sinc series applies
    let (c, s) = (1.0f64.cos(), 1.0f64.sin());
    let rot = ComplexMatrix::from_real_rows(&[&[c, -s], &[s, c]])?;
    let out = shannon_matrix_power(&rot, 0.25, &TruncationPolicy::new(20001, 0.0, 1)?)?;
    let exact = ComplexMatrix::from_real_rows(&[&[0.25f64.cos(), -0.25f64.sin()], &[0.25f64.sin(), 0.25f64.cos()]])?;
    println!("sinc series rotation^(1/4): {} terms, error {:.2e}", out.terms_used, out.value.distance(&exact));

    // cyclic shifts: the periodic formula is a finite sum. For odd order it is a true square
    // root; for even order the eigenvalue −1 is sent to cos(πα) = 0 and P² ≠ shift.
    for order in [5usize, 4] {
        let mut entries = vec![Complex64::new(0.0, 0.0); order * order];
        for i in 0..order {
            entries[((i + 1) % order) * order + i] = Complex64::new(1.0, 0.0);
        }
        let shift = ComplexMatrix::new(order, entries)?;
        let p = periodic_matrix_power(&shift, order, 0.5)?;
        println!("periodic shift of order {order}: ‖P² − shift‖ = {:.2e}", p.mul(&p).distance(&shift));
    }
    Ok(())
}
