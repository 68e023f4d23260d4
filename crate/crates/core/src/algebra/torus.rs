//! Compact torus elements of rank 1 through 4.

use super::quaternion::Quaternion;
use super::AlgebraError;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// An element of `T^k`, stored as `k` angles in radians reduced to
/// `[0, 2*pi)`. Equality of torus elements is always taken mod `2*pi`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElement {
    angles: Vec<f64>,
}

fn reduce(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid can return TAU itself for tiny negative inputs
    if r >= TAU {
        r - TAU
    } else {
        r
    }
}

impl TorusElement {
    pub fn new(angles: &[f64]) -> Result<Self, AlgebraError> {
        let rank = angles.len();
        if !(1..=4).contains(&rank) {
            return Err(AlgebraError::TorusRank { rank });
        }
        Ok(TorusElement {
            angles: angles.iter().map(|&t| reduce(t)).collect(),
        })
    }

    pub fn identity(rank: usize) -> Result<Self, AlgebraError> {
        Self::new(&vec![0.0; rank])
    }

    pub fn rank(&self) -> usize {
        self.angles.len()
    }

    pub fn angle(&self, i: usize) -> f64 {
        self.angles[i]
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// The i-th coordinate as a unit complex number.
    pub fn component(&self, i: usize) -> Complex64 {
        Complex64::new(self.angles[i].cos(), self.angles[i].sin())
    }

    pub fn components(&self) -> Vec<Complex64> {
        (0..self.rank()).map(|i| self.component(i)).collect()
    }

    pub fn compose(&self, other: &TorusElement) -> TorusElement {
        assert_eq!(self.rank(), other.rank(), "torus ranks differ");
        TorusElement {
            angles: self
                .angles
                .iter()
                .zip(other.angles.iter())
                .map(|(&a, &b)| reduce(a + b))
                .collect(),
        }
    }

    pub fn inverse(&self) -> TorusElement {
        TorusElement {
            angles: self.angles.iter().map(|&a| reduce(-a)).collect(),
        }
    }

    /// Angle-wise equality mod `2*pi` within `tol`.
    pub fn approx_eq(&self, other: &TorusElement, tol: f64) -> bool {
        self.rank() == other.rank()
            && self.angles.iter().zip(other.angles.iter()).all(|(&a, &b)| {
                let d = reduce(a - b);
                d <= tol || (TAU - d) <= tol
            })
    }
}

/// Left multiplication of a quaternion by a rank-1 torus element:
/// `(z, u) -> (t*z, conj(t)*u)` in the complex split, which agrees with the
/// Hamilton product by the embedded complex number `t`.
pub fn left_circle_on_quat(t: &TorusElement, h: &Quaternion) -> Quaternion {
    assert_eq!(t.rank(), 1, "left_circle_on_quat takes a rank-1 torus element");
    let tc = t.component(0);
    let (z, u) = h.split();
    Quaternion::from_split(tc * z, tc.conj() * u)
}
