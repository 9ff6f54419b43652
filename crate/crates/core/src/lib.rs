//! Fractional powers of linear operators built by interpolating integer powers.
//!
//! Two interpolation engines do the work:
//!
//! - the Newton (Pochhammer) series, `T^α = Σ_n [Σ_k P_k(n) T^k] P_n(α)`, valid when the
//!   spectrum of `T` sits in a disk tangent to the origin;
//! - the Shannon (sinc) series, `T^α = Σ_n sinc(α − n) T^n`, for unitary `T`, together with
//!   its exact finite form for operators of finite order.
//!
//! On top of the engines sit the applications: fractional integrals and derivatives of
//! sampled functions ([`frac_calculus`]), Newton interpolation of Dirichlet series and the
//! Riemann zeta function ([`dirichlet_interp`]), and a four-term fractional Fourier transform
//! compared against the chirp-kernel transform ([`frfrt`]).
//!
//! Every infinite series is cut off by a [`TruncationPolicy`] and reports how it stopped
//! through a [`SeriesOutcome`].

// `!(x > 0.0)` is used on purpose so NaN lands on the error path.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dirichlet_interp;
pub mod error;
pub mod frac_calculus;
pub mod frfrt;
pub mod interp_core;
pub mod io;
pub mod operator_powers;
pub mod special;
pub mod truncation;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use truncation::{SeriesOutcome, StopReason, TruncationPolicy};
