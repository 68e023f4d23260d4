//! Quaternion, octonion and torus arithmetic.
//!
//! Everything here is an immutable value with pure operations, safe to use
//! from any number of threads. Tolerances follow a two-level convention:
//! raw arithmetic identities hold to `1e-15`, composed algebraic identities
//! (products of several operations) to `1e-12`.

mod automorphism;
mod octonion;
mod quaternion;
mod torus;

pub use automorphism::OctonionAutomorphism;
pub use octonion::{Octonion, OCTONION_BASIS_NAMES};
pub use quaternion::{Quaternion, UnitQuaternion};
pub use torus::{left_circle_on_quat, TorusElement};

use thiserror::Error;

/// Unit-norm tolerance for algebra elements.
pub const UNIT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum AlgebraError {
    #[error("angles do not define an automorphism: alpha+beta+gamma = {sum} is not 0 mod 2*pi")]
    NotAnAutomorphism { sum: f64 },
    #[error("torus rank {rank} outside the supported range 1..=4")]
    TorusRank { rank: usize },
    #[error("element has norm {norm}, expected 1 within {tol}")]
    NotUnit { norm: f64, tol: f64 },
    #[error("cannot normalize an element of norm {norm}")]
    NormalizeZero { norm: f64 },
}
