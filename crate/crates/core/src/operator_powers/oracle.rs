use nalgebra::DMatrix;
use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::spectrum::schur;
use crate::error::{Error, Result};
use crate::special::cpow;

const BRANCH_TOL: f64 = 1e-12;
const MAX_CONDITION: f64 = 1e8;

/// `V diag(λ_i^α) V⁻¹` with principal-branch scalar powers.
///
/// Eigenvectors come from back-substitution on the complex Schur form. Refuses
/// defective or nearly defective input (eigenvector condition number above 1e8), an
/// eigenvalue within 1e-12 of the negative real axis unless `α` is a real integer, and a
/// (near) zero eigenvalue when `Re α ≤ 0`.
pub fn eigen_fractional_power_oracle(t: &ComplexMatrix, alpha: Complex64) -> Result<ComplexMatrix> {
    let (q, r) = schur(t.as_dmatrix());
    let n = r.nrows();
    let lambda: Vec<Complex64> = (0..n).map(|i| r[(i, i)]).collect();
    let integer_order = (alpha.im == 0.0 && alpha.re.fract() == 0.0).then_some(alpha.re as i32);

    for &l in &lambda {
        if l.norm() <= BRANCH_TOL {
            if alpha.re <= 0.0 {
                return Err(Error::BranchAmbiguous { eigenvalue: l });
            }
        } else if l.re < 0.0 && l.im.abs() <= BRANCH_TOL && integer_order.is_none() {
            return Err(Error::BranchAmbiguous { eigenvalue: l });
        }
    }

    let scale = r.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let delta = 1e-14 * scale;
    let mut y = DMatrix::<Complex64>::zeros(n, n);
    for j in 0..n {
        y[(j, j)] = Complex64::new(1.0, 0.0);
        for i in (0..j).rev() {
            let mut num = Complex64::new(0.0, 0.0);
            for k in (i + 1)..=j {
                num += r[(i, k)] * y[(k, j)];
            }
            let den = r[(i, i)] - lambda[j];
            y[(i, j)] = if den.norm() >= delta {
                -num / den
            } else if num.norm() <= delta {
                // repeated eigenvalue with a genuine second eigenvector direction
                Complex64::new(0.0, 0.0)
            } else {
                // defective block: the huge entry drives the condition check below
                -num / delta
            };
        }
        let norm = y.column(j).norm();
        y.column_mut(j).unscale_mut(norm);
    }
    let v = &q * &y;

    let sv = v.clone().svd(false, false).singular_values;
    let smax = sv.iter().copied().fold(0.0, f64::max);
    let smin = sv.iter().copied().fold(f64::INFINITY, f64::min);
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if !(condition < MAX_CONDITION) {
        return Err(Error::IllConditioned { condition });
    }
    let v_inv = v
        .clone()
        .try_inverse()
        .ok_or(Error::IllConditioned { condition: f64::INFINITY })?;

    let powers: Vec<Complex64> = lambda
        .iter()
        .map(|&l| match integer_order {
            Some(m) => l.powi(m),
            None => cpow(l, alpha),
        })
        .collect();
    let mut vd = v;
    for (j, p) in powers.iter().enumerate() {
        for x in vd.column_mut(j).iter_mut() {
            *x *= p;
        }
    }
    ComplexMatrix::from_dmatrix(vd * v_inv)
}
