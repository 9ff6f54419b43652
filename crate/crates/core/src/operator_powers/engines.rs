use num_complex::Complex64;
use serde::Serialize;

use super::matrix::ComplexMatrix;
use super::spectrum::{
    best_scale, certify_spectrum, eigenvalues, scaled_radius, smallest_tangent_disk, CertificateKind,
    REGION_TOL,
};
use crate::error::{Error, Result};
use crate::interp_core::{newton_operator_series, periodic_power_weights, shannon_series};
use crate::special::cpow;
use crate::truncation::{SeriesOutcome, SeriesValue, TruncationPolicy};

/// Scaling parameter of the Newton engine: `T^α = ρ^α (T/ρ)^α`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Rho {
    /// Choose `ρ` to pull the spectrum of `T/ρ` as far inside `B(1, 1)` as possible.
    #[default]
    Auto,
    Value(Complex64),
}

/// Result of [`newton_matrix_power`].
#[derive(Debug, Clone, Serialize)]
pub struct NewtonMatrixPower {
    pub outcome: SeriesOutcome<ComplexMatrix>,
    pub rho: Complex64,
    /// `max |λ/ρ − 1|` over the computed spectrum.
    pub scaled_radius: f64,
}

/// `T^α` from the Newton series of `k ↦ ρ^{α−k} T^k`.
///
/// The matrix-valued Newton coefficients are `ρ^α (I − T/ρ)^n`; the series is then
/// `Σ_n P_n(α) ρ^α (I − T/ρ)^n`. The spectrum of `T/ρ` must lie in the closed disk
/// `B(1, 1)`; eigenvalues on its boundary are accepted only for `Re α > 0`.
pub fn newton_matrix_power(
    t: &ComplexMatrix,
    alpha: Complex64,
    rho: Rho,
    policy: &TruncationPolicy,
) -> Result<NewtonMatrixPower> {
    if !alpha.re.is_finite() || !alpha.im.is_finite() {
        return Err(Error::domain("α must be finite"));
    }
    let eig = eigenvalues(t);
    let w = match rho {
        Rho::Auto => {
            if eig.iter().any(|l| l.norm() > 0.0) && smallest_tangent_disk(&eig).is_none() {
                let worst = eig.iter().copied().min_by(|a, b| a.re.total_cmp(&b.re));
                return Err(Error::CertificateRefused {
                    reason: "no disk B(z, |z|) contains the spectrum".into(),
                    eigenvalue: worst,
                });
            }
            best_scale(&eig)
        }
        Rho::Value(r) => {
            if !(r.norm() > 0.0) || !r.re.is_finite() || !r.im.is_finite() {
                return Err(Error::domain("ρ must be finite and nonzero"));
            }
            1.0 / r
        }
    };
    let rho = 1.0 / w;
    let q = scaled_radius(&eig, w);
    if q > 1.0 + REGION_TOL {
        let worst = eig
            .iter()
            .copied()
            .max_by(|a, b| (a * w - 1.0).norm().total_cmp(&(b * w - 1.0).norm()));
        return Err(Error::CertificateRefused {
            reason: format!("spectrum of T/ρ leaves B(1, 1) (radius {q}) for ρ = {rho}"),
            eigenvalue: worst,
        });
    }
    if q >= 1.0 - REGION_TOL && alpha.re <= 0.0 {
        return Err(Error::domain(format!(
            "spectrum of T/ρ touches the boundary of B(1, 1); needs Re α > 0, got α = {alpha}"
        )));
    }
    log::debug!("newton_matrix_power: ρ = {rho}, scaled radius {q}");
    let n = t.dim();
    let step = ComplexMatrix::identity(n).sub(&t.scale(w));
    let series = newton_operator_series(ComplexMatrix::identity(n), |v| v.mul(&step), alpha, policy);
    let factor = cpow(rho, alpha);
    Ok(NewtonMatrixPower {
        outcome: series.map(|m| m.scale(factor)),
        rho,
        scaled_radius: q,
    })
}

/// Symmetric partial sums `Σ_{|n|≤N} sinc(α − n) U^n` for unitary `U`.
pub fn shannon_matrix_power(
    u: &ComplexMatrix,
    alpha: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesOutcome<ComplexMatrix>> {
    if !alpha.is_finite() {
        return Err(Error::domain("α must be finite"));
    }
    certify_spectrum(u, CertificateKind::UnitCircle)?;
    let inverse = u.adjoint();
    Ok(shannon_series(
        ComplexMatrix::identity(u.dim()),
        |v| v.mul(u),
        |v| v.mul(&inverse),
        alpha,
        policy,
    ))
}

/// `Σ_{n<N} w_n(α) T^n` for `T` with `T^N = I`; a finite, exact formula.
pub fn periodic_matrix_power(t: &ComplexMatrix, order: usize, alpha: f64) -> Result<ComplexMatrix> {
    if !alpha.is_finite() {
        return Err(Error::domain("α must be finite"));
    }
    certify_spectrum(t, CertificateKind::FiniteOrder { order })?;
    let weights = periodic_power_weights(order, alpha);
    let n = t.dim();
    let mut power = ComplexMatrix::identity(n);
    let mut acc = power.scale(Complex64::new(weights.weights[0], 0.0));
    for &w in &weights.weights[1..] {
        power = power.mul(t);
        if w != 0.0 {
            acc.add_assign_ref(&power.scale(Complex64::new(w, 0.0)));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truncation::StopReason;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn rotation(angle: f64) -> ComplexMatrix {
        let (s, co) = angle.sin_cos();
        ComplexMatrix::from_real_rows(&[&[co, -s], &[s, co]]).unwrap()
    }

    fn policy() -> TruncationPolicy {
        TruncationPolicy::new(200, 1e-15, 3).unwrap()
    }

    #[test]
    fn newton_examples() {
        let id = ComplexMatrix::identity(3);
        let r = newton_matrix_power(&id, Complex64::new(0.3, 0.4), Rho::Value(c(1.0)), &policy()).unwrap();
        assert!(r.outcome.value.distance(&id) < 1e-15);

        let d = ComplexMatrix::diagonal(&[c(0.8), c(1.2)]);
        let r = newton_matrix_power(&d, c(0.5), Rho::Value(c(1.0)), &policy()).unwrap();
        let want = ComplexMatrix::diagonal(&[c(0.894_427_19), c(1.095_445_12)]);
        assert!(r.outcome.value.distance(&want) < 1e-8);
        assert!(r.outcome.converged());

        let nil = ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.5, 1.0]]).unwrap();
        let r = newton_matrix_power(&nil, c(0.5), Rho::Value(c(1.0)), &policy()).unwrap();
        let want = ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.25, 1.0]]).unwrap();
        assert!(r.outcome.value.distance(&want) < 1e-15);
    }

    #[test]
    fn newton_auto_rho_handles_wide_spectrum() {
        let d = ComplexMatrix::diagonal(&[c(0.05), c(3.0), Complex64::new(1.0, 1.0)]);
        let r = newton_matrix_power(&d, c(0.5), Rho::Auto, &TruncationPolicy::new(400, 1e-14, 3).unwrap())
            .unwrap();
        assert!(r.scaled_radius < 1.0);
        let want = ComplexMatrix::diagonal(&[
            c(0.05f64.sqrt()),
            c(3f64.sqrt()),
            Complex64::new(1.0, 1.0).sqrt(),
        ]);
        assert!(r.outcome.value.distance(&want) < 1e-6, "{}", r.outcome.value.distance(&want));
    }

    #[test]
    fn newton_refusals() {
        let d = ComplexMatrix::diagonal(&[c(2.5)]);
        assert!(matches!(
            newton_matrix_power(&d, c(0.5), Rho::Value(c(1.0)), &policy()),
            Err(Error::CertificateRefused { .. })
        ));
        // spectrum {1, −1} cannot be placed in any disk through the origin
        let d = ComplexMatrix::diagonal(&[c(1.0), c(-1.0)]);
        assert!(matches!(
            newton_matrix_power(&d, c(0.5), Rho::Auto, &policy()),
            Err(Error::CertificateRefused { .. })
        ));
        // boundary eigenvalue 2 with Re α ≤ 0
        let d = ComplexMatrix::diagonal(&[c(2.0), c(1.0)]);
        assert!(matches!(
            newton_matrix_power(&d, c(-0.5), Rho::Value(c(1.0)), &policy()),
            Err(Error::Domain(_))
        ));
        let r = newton_matrix_power(&d, c(2.0), Rho::Value(c(1.0)), &policy()).unwrap();
        assert_eq!(r.outcome.stop, StopReason::Exact);
        assert!(r.outcome.value.distance(&ComplexMatrix::diagonal(&[c(4.0), c(1.0)])) < 1e-14);
    }

    #[test]
    fn shannon_examples() {
        let p = TruncationPolicy::new(20_000, 0.0, 3).unwrap();
        let id = ComplexMatrix::identity(2);
        let r = shannon_matrix_power(&id, 0.5, &p).unwrap();
        assert!(r.value.distance(&id) < 1e-4);

        let i1 = ComplexMatrix::new(1, vec![Complex64::new(0.0, 1.0)]).unwrap();
        let r = shannon_matrix_power(&i1, 0.5, &p).unwrap();
        let scalar = crate::interp_core::shannon_eval_power(PI / 2.0, 0.5, &p).unwrap();
        assert!((r.value.get(0, 0) - scalar.value).norm() < 1e-12);

        let r = shannon_matrix_power(&rotation(PI / 3.0), 0.5, &p).unwrap();
        assert!(r.value.distance(&rotation(PI / 6.0)) < 1e-4);

        let not_unitary = ComplexMatrix::diagonal(&[c(2.0)]);
        assert!(shannon_matrix_power(&not_unitary, 0.5, &p).is_err());
    }

    #[test]
    fn periodic_examples() {
        let quarter = rotation(PI / 2.0);
        let r = periodic_matrix_power(&quarter, 4, 0.5).unwrap();
        assert!(r.distance(&rotation(PI / 4.0)) < 1e-12);
        for m in 0..9u32 {
            let r = periodic_matrix_power(&quarter, 4, m as f64).unwrap();
            assert!(r.distance(&quarter.pow(m % 4)) < 1e-12);
        }
        let cycle =
            ComplexMatrix::from_real_rows(&[&[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]]).unwrap();
        let r = periodic_matrix_power(&cycle, 3, 1.0).unwrap();
        assert!(r.distance(&cycle) < 1e-12);
        assert!(periodic_matrix_power(&cycle, 2, 0.5).is_err());
    }
}
