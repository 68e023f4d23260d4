//! The torus of octonion automorphisms fixing `1` and `l`.
//!
//! For angles `alpha + beta + gamma = 0 mod 2*pi` the automorphism rotates
//! the `(i, il)`, `(j, jl)`, `(k, kl)` coordinate planes by `alpha`, `beta`,
//! `gamma` respectively: as a matrix in the basis `1, l, i, il, j, jl, k,
//! kl` it is block diagonal with 2x2 blocks
//!
//! ```text
//! [  cos t  sin t ]
//! [ -sin t  cos t ]
//! ```
//!
//! so the image of `i` is `cos(alpha)*i - sin(alpha)*il`, i.e. the left
//! product `(cos(alpha) + sin(alpha)*l) * i` in the Cayley-Dickson
//! convention of [`super::Octonion`]. The constraint on the angle sum is
//! what makes these maps multiplicative; dropping it breaks the `k`-plane
//! compatibility and the constructor rejects such triples.

use super::octonion::Octonion;
use super::AlgebraError;
use nalgebra::SMatrix;
use std::f64::consts::TAU;

pub type Matrix8 = SMatrix<f64, 8, 8>;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctonionAutomorphism {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

const SUM_TOL: f64 = 1e-12;

impl OctonionAutomorphism {
    /// Requires `alpha + beta + gamma = 0 mod 2*pi` within `1e-12`.
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self, AlgebraError> {
        let sum = (alpha + beta + gamma).rem_euclid(TAU);
        let dist = sum.min(TAU - sum);
        if dist > SUM_TOL {
            return Err(AlgebraError::NotAnAutomorphism { sum });
        }
        Ok(OctonionAutomorphism { alpha, beta, gamma })
    }

    /// The automorphism with `gamma = -alpha - beta`.
    pub fn from_alpha_beta(alpha: f64, beta: f64) -> Self {
        OctonionAutomorphism { alpha, beta, gamma: -alpha - beta }
    }

    pub fn identity() -> Self {
        OctonionAutomorphism { alpha: 0.0, beta: 0.0, gamma: 0.0 }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Angle-wise composition; the family is a rank-2 torus.
    pub fn compose(&self, other: &Self) -> Self {
        OctonionAutomorphism {
            alpha: self.alpha + other.alpha,
            beta: self.beta + other.beta,
            gamma: self.gamma + other.gamma,
        }
    }

    pub fn inverse(&self) -> Self {
        OctonionAutomorphism { alpha: -self.alpha, beta: -self.beta, gamma: -self.gamma }
    }

    pub fn apply(&self, x: &Octonion) -> Octonion {
        let mut coeffs = x.coeffs;
        for (pair, angle) in [(2usize, self.alpha), (4, self.beta), (6, self.gamma)] {
            let (c, s) = (angle.cos(), angle.sin());
            let (v0, v1) = (x.coeffs[pair], x.coeffs[pair + 1]);
            coeffs[pair] = c * v0 + s * v1;
            coeffs[pair + 1] = -s * v0 + c * v1;
        }
        Octonion::new(coeffs)
    }

    /// The 8x8 matrix of the automorphism; orthogonal, block diagonal.
    pub fn matrix(&self) -> Matrix8 {
        let mut m = Matrix8::identity();
        for (pair, angle) in [(2usize, self.alpha), (4, self.beta), (6, self.gamma)] {
            let (c, s) = (angle.cos(), angle.sin());
            m[(pair, pair)] = c;
            m[(pair, pair + 1)] = s;
            m[(pair + 1, pair)] = -s;
            m[(pair + 1, pair + 1)] = c;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lcg(state: &mut u64) -> f64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (*state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    }

    #[test]
    fn rejects_bad_angle_sum() {
        assert!(OctonionAutomorphism::new(0.1, 0.2, 0.3).is_err());
        assert!(OctonionAutomorphism::new(0.1, 0.2, -0.3).is_ok());
        assert!(OctonionAutomorphism::new(0.1, 0.2, TAU - 0.3).is_ok());
    }

    #[test]
    fn identity_fixes_everything() {
        let id = OctonionAutomorphism::identity();
        let x = Octonion::new([0.5, -0.25, 0.1, 0.9, -0.4, 0.3, 0.2, -0.8]);
        assert_eq!(id.apply(&x), x);
        assert_eq!(id.matrix(), Matrix8::identity());
    }

    #[test]
    fn fixes_one_and_l_exactly() {
        let s = OctonionAutomorphism::from_alpha_beta(0.7, -1.3);
        assert_eq!(s.apply(&Octonion::basis(0)), Octonion::basis(0));
        assert_eq!(s.apply(&Octonion::basis(1)), Octonion::basis(1));
    }

    #[test]
    fn matrix_column_of_i() {
        let alpha = 0.6;
        let s = OctonionAutomorphism::from_alpha_beta(alpha, 0.2);
        let m = s.matrix();
        let col: Vec<f64> = (0..8).map(|r| m[(r, 2)]).collect();
        let expected = [0.0, 0.0, alpha.cos(), -alpha.sin(), 0.0, 0.0, 0.0, 0.0];
        for (got, want) in col.iter().zip(expected.iter()) {
            assert!((got - want).abs() <= 1e-15);
        }
    }

    #[test]
    fn matrix_agrees_with_apply_on_basis() {
        let s = OctonionAutomorphism::from_alpha_beta(1.1, 0.4);
        let m = s.matrix();
        for b in 0..8 {
            let image = s.apply(&Octonion::basis(b));
            for r in 0..8 {
                assert!((m[(r, b)] - image.coeffs[r]).abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn matrix_is_orthogonal() {
        let s = OctonionAutomorphism::from_alpha_beta(-2.4, 0.9);
        let m = s.matrix();
        let residual = (m.transpose() * m - Matrix8::identity()).norm();
        assert!(residual <= 1e-14);
    }

    #[test]
    fn is_an_algebra_automorphism() {
        let mut state = 77u64;
        for _ in 0..200 {
            let alpha = lcg(&mut state) * 12.0;
            let beta = lcg(&mut state) * 12.0;
            let s = OctonionAutomorphism::from_alpha_beta(alpha, beta);
            for _ in 0..20 {
                let x = Octonion::new(std::array::from_fn(|_| lcg(&mut state)));
                let y = Octonion::new(std::array::from_fn(|_| lcg(&mut state)));
                let lhs = s.apply(&(x * y));
                let rhs = s.apply(&x) * s.apply(&y);
                assert!(lhs.distance(&rhs) <= 1e-12);
            }
        }
    }

    #[test]
    fn composition_law() {
        let mut state = 91u64;
        for _ in 0..100 {
            let s1 = OctonionAutomorphism::from_alpha_beta(lcg(&mut state) * 9.0, lcg(&mut state) * 9.0);
            let s2 = OctonionAutomorphism::from_alpha_beta(lcg(&mut state) * 9.0, lcg(&mut state) * 9.0);
            let composed = s1.compose(&s2);
            let residual = (s1.matrix() * s2.matrix() - composed.matrix()).norm();
            assert!(residual <= 1e-12);
        }
    }
}
