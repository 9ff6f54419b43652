use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

pub(crate) const REGION_TOL: f64 = 1e-9;

/// Region a spectrum is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CertificateKind {
    Disk { center: Complex64, radius: f64 },
    UnitCircle,
    FiniteOrder { order: usize },
}

impl CertificateKind {
    /// The disk `B(1, 1)` the Newton engine needs after scaling.
    pub fn unit_newton_disk() -> Self {
        CertificateKind::Disk {
            center: Complex64::new(1.0, 0.0),
            radius: 1.0,
        }
    }
}

/// A spectral region that a matrix was checked to satisfy, with the evidence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralCertificate {
    pub kind: CertificateKind,
    pub evidence: String,
    /// Computed eigenvalues (empty when the check did not need them).
    pub eigenvalues: Vec<Complex64>,
    /// Smallest disk `B(z, |z|)` through the origin containing the spectrum, if any.
    pub tangent_disk: Option<TangentDisk>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TangentDisk {
    pub center: Complex64,
}

impl TangentDisk {
    pub fn radius(&self) -> f64 {
        self.center.norm()
    }
}

/// Eigenvalues from a complex Schur decomposition.
pub fn eigenvalues(t: &ComplexMatrix) -> Vec<Complex64> {
    let (_, r) = schur(t.as_dmatrix());
    r.diagonal().iter().copied().collect()
}

/// `(Q, R)` with `T = Q R Q*`, `R` upper triangular.
pub(crate) fn schur(m: &DMatrix<Complex64>) -> (DMatrix<Complex64>, DMatrix<Complex64>) {
    let schur = nalgebra::Schur::try_new(m.clone(), f64::EPSILON, 10_000)
        .unwrap_or_else(|| nalgebra::Schur::new(m.clone()));
    let (q, mut r) = schur.unpack();
    // the solver leaves exact zeros implicit below the diagonal; clear residue
    for j in 0..r.ncols() {
        for i in (j + 1)..r.nrows() {
            r[(i, j)] = Complex64::new(0.0, 0.0);
        }
    }
    (q, r)
}

/// Checks `t` against `requested`, or refuses with the offending eigenvalue.
pub fn certify_spectrum(t: &ComplexMatrix, requested: CertificateKind) -> Result<SpectralCertificate> {
    let n = t.dim();
    match requested {
        CertificateKind::Disk { center, radius } => {
            if !(radius >= 0.0) {
                return Err(Error::domain("disk radius must be nonnegative"));
            }
            let eig = eigenvalues(t);
            if let Some(&bad) = eig
                .iter()
                .find(|&&l| (l - center).norm() > radius + REGION_TOL)
            {
                return Err(Error::CertificateRefused {
                    reason: format!(
                        "eigenvalue lies outside B({center}, {radius}) (distance {})",
                        (bad - center).norm()
                    ),
                    eigenvalue: Some(bad),
                });
            }
            let tangent_disk = smallest_tangent_disk(&eig);
            Ok(SpectralCertificate {
                kind: requested,
                evidence: format!("dense Schur eigensolve, {n} eigenvalues within tolerance {REGION_TOL}"),
                eigenvalues: eig,
                tangent_disk,
            })
        }
        CertificateKind::UnitCircle => {
            let defect = t.adjoint().mul(t).distance(&ComplexMatrix::identity(n));
            if defect > REGION_TOL {
                let eig = eigenvalues(t);
                let worst = eig
                    .iter()
                    .copied()
                    .max_by(|a, b| (a.norm() - 1.0).abs().total_cmp(&(b.norm() - 1.0).abs()));
                return Err(Error::CertificateRefused {
                    reason: format!("not unitary: ‖T*T − I‖_F = {defect:e}"),
                    eigenvalue: worst,
                });
            }
            Ok(SpectralCertificate {
                kind: requested,
                evidence: format!("unitarity check ‖T*T − I‖_F = {defect:e}"),
                eigenvalues: Vec::new(),
                tangent_disk: None,
            })
        }
        CertificateKind::FiniteOrder { order } => {
            if order == 0 {
                return Err(Error::domain("order must be positive"));
            }
            let power = u32::try_from(order).map_err(|_| Error::domain("order too large"))?;
            let defect = t.pow(power).distance(&ComplexMatrix::identity(n));
            if defect > REGION_TOL {
                let eig = eigenvalues(t);
                let worst = eig.iter().copied().max_by(|a, b| {
                    (a.powu(power) - 1.0).norm().total_cmp(&(b.powu(power) - 1.0).norm())
                });
                return Err(Error::CertificateRefused {
                    reason: format!("T^{order} ≠ I: ‖T^{order} − I‖_F = {defect:e}"),
                    eigenvalue: worst,
                });
            }
            Ok(SpectralCertificate {
                kind: requested,
                evidence: format!("‖T^{order} − I‖_F = {defect:e}"),
                eigenvalues: Vec::new(),
                tangent_disk: None,
            })
        }
    }
}

/// Radius `t(φ)` of the smallest disk `B(t e^{iφ}, t)` containing every eigenvalue,
/// or `None` when some nonzero eigenvalue is not in the open half plane facing `e^{iφ}`.
fn tangent_radius(eig: &[Complex64], phi: f64) -> Option<f64> {
    let dir = Complex64::from_polar(1.0, -phi);
    let mut t: f64 = 0.0;
    for &l in eig {
        let m2 = l.norm_sqr();
        if m2 == 0.0 {
            continue;
        }
        let proj = (l * dir).re;
        if proj <= 0.0 {
            return None;
        }
        t = t.max(m2 / (2.0 * proj));
    }
    Some(t)
}

/// Smallest disk of the form `B(z, |z|)` containing the spectrum, by a 1-D search over
/// the direction of `z`. `None` when the spectrum is `{0}` or no such disk exists.
pub fn smallest_tangent_disk(eig: &[Complex64]) -> Option<TangentDisk> {
    if eig.iter().all(|l| l.norm() == 0.0) {
        return None;
    }
    let steps = 3600;
    let mut best: Option<(f64, f64)> = None;
    for i in 0..steps {
        let phi = -PI + 2.0 * PI * i as f64 / steps as f64;
        if let Some(t) = tangent_radius(eig, phi) {
            if best.is_none_or(|(_, bt)| t < bt) {
                best = Some((phi, t));
            }
        }
    }
    let (phi0, _) = best?;
    // t(φ) is unimodal near the grid minimum; refine by golden section
    let h = 2.0 * PI / steps as f64;
    let eval = |phi: f64| tangent_radius(eig, phi).unwrap_or(f64::INFINITY);
    let refined = golden_min(phi0 - h, phi0 + h, 80, eval);
    let phi = if eval(refined) <= eval(phi0) { refined } else { phi0 };
    let t = eval(phi);
    Some(TangentDisk {
        center: Complex64::from_polar(t, phi),
    })
}

/// `max_i |λ_i w − 1|`, the radius about 1 of the spectrum of `wT`.
pub(crate) fn scaled_radius(eig: &[Complex64], w: Complex64) -> f64 {
    eig.iter()
        .map(|&l| (l * w - 1.0).norm())
        .fold(0.0, f64::max)
}

/// Minimizes a unimodal function on `[a, b]` by golden-section search; returns the argmin.
fn golden_min(mut a: f64, mut b: f64, iters: usize, f: impl Fn(f64) -> f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iters {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        c
    } else {
        d
    }
}

/// The scale `w = 1/ρ` minimizing `max_i |λ_i w − 1|`.
///
/// The objective is convex in `w`, so along each ray `w = s e^{−iφ}` it is convex in `s`,
/// and its sublevel sets below 1 avoid the origin, which makes the best value per ray
/// unimodal in `φ` around the optimum. Both searches are golden sections.
pub(crate) fn best_scale(eig: &[Complex64]) -> Complex64 {
    let nonzero: Vec<Complex64> = eig.iter().copied().filter(|l| l.norm() > 0.0).collect();
    if nonzero.is_empty() {
        return Complex64::new(1.0, 0.0);
    }
    let s_max = 2.0 / nonzero.iter().map(|l| l.norm()).fold(0.0, f64::max);
    let best_on_ray = |phi: f64| -> (f64, f64) {
        let dir = Complex64::from_polar(1.0, -phi);
        let q = |s: f64| scaled_radius(&nonzero, dir * s);
        let s = golden_min(0.0, s_max, 90, q);
        (s, q(s))
    };
    let steps = 360;
    let h = 2.0 * PI / steps as f64;
    let (mut phi0, mut q0) = (0.0, f64::INFINITY);
    for i in 0..steps {
        let phi = -PI + h * i as f64;
        let (_, q) = best_on_ray(phi);
        if q < q0 {
            phi0 = phi;
            q0 = q;
        }
    }
    let phi = golden_min(phi0 - h, phi0 + h, 60, |phi| best_on_ray(phi).1);
    let (phi, s) = {
        let (s1, q1) = best_on_ray(phi);
        if q1 <= q0 {
            (phi, s1)
        } else {
            (phi0, best_on_ray(phi0).0)
        }
    };
    let w = Complex64::from_polar(s, -phi);
    // q is convex in w; a conjugation-symmetric spectrum therefore has a real optimum,
    // which the line search finds to full precision.
    if closed_under_conjugation(&nonzero) {
        let q = |s: f64| scaled_radius(&nonzero, Complex64::new(s, 0.0));
        let s_real = golden_min(-s_max, s_max, 120, q);
        if q(s_real) <= scaled_radius(&nonzero, w) + 1e-12 {
            return Complex64::new(s_real, 0.0);
        }
    }
    w
}

fn closed_under_conjugation(eig: &[Complex64]) -> bool {
    let scale = eig.iter().map(|l| l.norm()).fold(0.0, f64::max);
    eig.iter()
        .all(|l| eig.iter().any(|m| (m.conj() - l).norm() <= 1e-10 * scale))
}
