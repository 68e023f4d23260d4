//! Explicit quotient maps onto concrete orbit-space models.
//!
//! Each map sends a point of a sphere, projective plane or product of
//! spheres to ambient coordinates of the claimed orbit-space model. The
//! output carries named constraint residuals: the constraints cut out the
//! model (a sphere, disk or interval) inside its ambient space, so a small
//! residual certifies membership while invariance and separation are
//! checked by sampling in [`crate::harness`].

mod fibers;
mod hp2;
mod spheres;

pub use fibers::{
    act_biaxial, act_conj_circle, act_diag_circle, act_s3s3_t3, s3_biaxial_quotient,
    s3_conj_circle_quotient, s3s3_diag_circle_quotient, s3s3_t3_quotient, S3S3Chart,
};
pub use hp2::{
    act_right_quat, act_t3, hopf, hp2_distance, hp2_stabilizer_check, hp2_to_s5,
    join_coordinates, stratify_hp2, Hp2Point, Hp2Stabilizer, Hp2Stratum, JoinCoordinates,
    StratumClassification, DEFAULT_STRATUM_TOL,
};
pub use spheres::{
    act_cp2, act_s6_torus, cp2_conj_to_s4, imaginary_octonion_from_s6, s4_invol_quotient,
    s6_from_imaginary_octonion, s6_subtorus_t2, s6_to_s4, torus_invol_quotient, Cp2Point,
    S6Point,
};

use thiserror::Error;

/// Sign labels used both for stratum names and for chart exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.as_i32() as f64
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum OrbitMapError {
    #[error("homogeneous coordinates have total norm {norm}, expected 1 within 1e-12")]
    NotNormalized { norm: f64 },
    #[error("cannot normalize a zero coordinate tuple")]
    ZeroPoint,
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error(transparent)]
    Matrix(#[from] crate::matrix::MatrixError),
}

/// Ambient-coordinate image of an orbit, with the constraint residuals of
/// the target model attached.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientPoint {
    coords: Vec<f64>,
    residuals: Vec<(&'static str, f64)>,
}

impl QuotientPoint {
    pub fn new(coords: Vec<f64>, residuals: Vec<(&'static str, f64)>) -> Self {
        QuotientPoint { coords, residuals }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn residuals(&self) -> &[(&'static str, f64)] {
        &self.residuals
    }

    pub fn residual(&self, name: &str) -> Option<f64> {
        self.residuals
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals
            .iter()
            .map(|(_, v)| v.abs())
            .fold(0.0, f64::max)
    }

    /// Euclidean distance between image coordinates.
    pub fn distance(&self, other: &QuotientPoint) -> f64 {
        assert_eq!(self.coords.len(), other.coords.len(), "coordinate arity mismatch");
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}
