//! Fractional powers of dense complex matrices.
//!
//! Three engines: the Newton series for matrices whose spectrum fits in a disk through the
//! origin, the symmetric sinc series for unitary matrices, and the finite periodic formula
//! for matrices with `T^N = I`. An eigendecomposition oracle provides an independent check.

mod engines;
mod matrix;
mod oracle;
mod spectrum;

pub use engines::{
    newton_matrix_power, periodic_matrix_power, shannon_matrix_power, NewtonMatrixPower, Rho,
};
pub use matrix::ComplexMatrix;
pub use oracle::eigen_fractional_power_oracle;
pub use spectrum::{
    certify_spectrum, eigenvalues, smallest_tangent_disk, CertificateKind, SpectralCertificate,
    TangentDisk,
};
