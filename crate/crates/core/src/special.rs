//! Elementary and special functions shared across the crate.

use num_complex::Complex64;
use std::f64::consts::PI;

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // r in [-1, 1]
    let r = x - 2.0 * (x / 2.0).round();
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

/// `cos(πx)` with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = (x - 2.0 * (x / 2.0).round()).abs();
    (PI * (0.5 - r)).sin()
}

/// Complex `sin(πz)`, built on [`sin_pi`]/[`cos_pi`] so integer real parts stay exact.
pub fn sin_pi_complex(z: Complex64) -> Complex64 {
    let (sx, cx) = (sin_pi(z.re), cos_pi(z.re));
    let y = PI * z.im;
    Complex64::new(sx * y.cosh(), cx * y.sinh())
}

/// Principal argument in `(−π, π]`.
pub fn principal_arg(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    if a == -PI {
        PI
    } else {
        a
    }
}

/// Principal logarithm.
pub fn principal_ln(z: Complex64) -> Complex64 {
    Complex64::new(z.norm().ln(), principal_arg(z))
}

/// Principal-branch power `z^a`.
///
/// `0^a` is `1` for `a = 0`, `0` for `Re a > 0` and NaN otherwise.
pub fn cpow(z: Complex64, a: Complex64) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return if a == Complex64::new(0.0, 0.0) {
            Complex64::new(1.0, 0.0)
        } else if a.re > 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(f64::NAN, f64::NAN)
        };
    }
    (a * principal_ln(z)).exp()
}

/// `x^a` for a positive real base.
pub fn real_pow(x: f64, a: Complex64) -> Complex64 {
    debug_assert!(x >= 0.0);
    if x == 0.0 {
        return cpow(Complex64::new(0.0, 0.0), a);
    }
    (a * x.ln()).exp()
}

/// Returns `Some(m)` when `z` is (to within `tol`) the nonnegative integer `m`.
pub fn as_nonnegative_integer(z: Complex64, tol: f64) -> Option<u64> {
    if z.im.abs() > tol || z.re < -tol {
        return None;
    }
    let m = z.re.round();
    if (z.re - m).abs() <= tol {
        Some(m as u64)
    } else {
        None
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Complex gamma function (Lanczos, g = 7, reflection for `Re z < 1/2`).
///
/// Poles at the nonpositive integers come back as infinite values.
pub fn gamma(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Complex64::new(f64::INFINITY, 0.0);
    }
    if z.re < 0.5 {
        let s = sin_pi_complex(z);
        return Complex64::new(PI, 0.0) / (s * gamma(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * cpow(t, z + 0.5) * (-t).exp() * acc
}

/// Reciprocal gamma, zero at the poles of `Γ`.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::new(1.0, 0.0) / gamma(z)
}

/// Real gamma for convenience.
pub fn gamma_real(x: f64) -> f64 {
    gamma(Complex64::new(x, 0.0)).re
}
