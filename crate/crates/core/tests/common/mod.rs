#![allow(dead_code)]

use fracterp::operator_powers::ComplexMatrix;
use fracterp::Complex64;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Unitary factor of the QR decomposition of a random complex matrix.
pub fn random_unitary(rng: &mut impl Rng, n: usize) -> DMatrix<Complex64> {
    let a = DMatrix::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    a.qr().q()
}

/// `Q diag(eigs) Q*` with a random unitary `Q`.
pub fn normal_with_spectrum(rng: &mut impl Rng, eigs: &[Complex64]) -> ComplexMatrix {
    let q = random_unitary(rng, eigs.len());
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(eigs));
    ComplexMatrix::from_dmatrix(&q * d * q.adjoint()).unwrap()
}

/// A point drawn uniformly from the disk `B(center, radius)`.
pub fn point_in_disk(rng: &mut impl Rng, center: Complex64, radius: f64) -> Complex64 {
    let r = radius * rng.gen_range(0.0f64..1.0).sqrt();
    let theta = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    center + Complex64::from_polar(r, theta)
}

/// Random 4×4 normal matrix with spectrum in `B(1, 0.8)`.
pub fn random_normal_in_disk(rng: &mut impl Rng) -> ComplexMatrix {
    let eigs: Vec<Complex64> = (0..4).map(|_| point_in_disk(rng, c(1.0), 0.8)).collect();
    normal_with_spectrum(rng, &eigs)
}

pub fn relative_error(got: &ComplexMatrix, want: &ComplexMatrix) -> f64 {
    got.distance(want) / want.frobenius_norm()
}
