//! Quotients of spheres and projective spaces by tori, involutions and
//! their composites.

use super::{OrbitMapError, QuotientPoint};
use crate::algebra::{Octonion, TorusElement};
use crate::matrix::{quotient_yn1n_on, NormalizedMatrix, PsdMatrix};
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::TAU;

const NORM_TOL: f64 = 1e-12;

/// A point of the six-sphere `r^2 + |z1|^2 + |z2|^2 + |z3|^2 = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct S6Point {
    pub r: f64,
    pub z: [Complex64; 3],
}

impl S6Point {
    pub fn new(r: f64, z: [Complex64; 3]) -> Result<Self, OrbitMapError> {
        let norm2 = r * r + z.iter().map(|w| w.norm_sqr()).sum::<f64>();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(OrbitMapError::NotNormalized { norm: norm2.sqrt() });
        }
        Ok(S6Point { r, z })
    }

    pub fn normalize(r: f64, z: [Complex64; 3]) -> Result<Self, OrbitMapError> {
        let norm2 = r * r + z.iter().map(|w| w.norm_sqr()).sum::<f64>();
        if norm2 < 1e-300 {
            return Err(OrbitMapError::ZeroPoint);
        }
        let s = 1.0 / norm2.sqrt();
        Ok(S6Point { r: r * s, z: [z[0] * s, z[1] * s, z[2] * s] })
    }

    pub fn from_coords(c: &[f64]) -> Result<Self, OrbitMapError> {
        assert_eq!(c.len(), 7, "a six-sphere point has 7 real coordinates");
        S6Point::new(
            c[0],
            [
                Complex64::new(c[1], c[2]),
                Complex64::new(c[3], c[4]),
                Complex64::new(c[5], c[6]),
            ],
        )
    }

    pub fn coords(&self) -> [f64; 7] {
        [
            self.r, self.z[0].re, self.z[0].im, self.z[1].re, self.z[1].im, self.z[2].re,
            self.z[2].im,
        ]
    }
}

/// Coordinatewise rotation by a rank-3 torus element.
pub fn act_s6_torus(t: &TorusElement, p: &S6Point) -> S6Point {
    assert_eq!(t.rank(), 3, "the six-sphere carries a rank-3 torus");
    S6Point {
        r: p.r,
        z: [
            t.component(0) * p.z[0],
            t.component(1) * p.z[1],
            t.component(2) * p.z[2],
        ],
    }
}

/// The rank-2 subtorus `{ t1 t2 t3 = 1 }`, parametrized by its first two
/// angles.
pub fn s6_subtorus_t2(theta1: f64, theta2: f64) -> TorusElement {
    TorusElement::new(&[theta1, theta2, -theta1 - theta2]).expect("rank 3")
}

/// Quotient of the six-sphere by the rank-2 subtorus: moduli plus the
/// invariant triple product. The image is the double of the corner disk
/// along its boundary: `(Re w, Im w)` has modulus exactly `c1 c2 c3`,
/// vanishing where any modulus does.
pub fn s6_to_s4(p: &S6Point) -> QuotientPoint {
    let c = [p.z[0].norm(), p.z[1].norm(), p.z[2].norm()];
    let w = p.z[0] * p.z[1] * p.z[2];
    let residual = (w.norm() - c[0] * c[1] * c[2]).abs();
    QuotientPoint::new(
        vec![p.r, c[0], c[1], c[2], w.re, w.im],
        vec![("phase_modulus", residual)],
    )
}

/// Embeds a six-sphere point as a unit imaginary octonion: `r` on the
/// doubling unit `l` and the complex pairs on the `(i,il)`, `(j,jl)`,
/// `(k,kl)` planes.
pub fn imaginary_octonion_from_s6(p: &S6Point) -> Octonion {
    Octonion::new([
        0.0, p.r, p.z[0].re, p.z[0].im, p.z[1].re, p.z[1].im, p.z[2].re, p.z[2].im,
    ])
}

/// Inverse of [`imaginary_octonion_from_s6`]; requires a unit imaginary
/// octonion.
pub fn s6_from_imaginary_octonion(o: &Octonion) -> Result<S6Point, OrbitMapError> {
    let c = &o.coeffs;
    assert!(c[0].abs() <= NORM_TOL, "octonion must be imaginary");
    S6Point::new(
        c[1],
        [
            Complex64::new(c[2], c[3]),
            Complex64::new(c[4], c[5]),
            Complex64::new(c[6], c[7]),
        ],
    )
}

/// A point of the complex projective plane in unit homogeneous
/// coordinates, considered up to phase and conjugation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cp2Point {
    pub z: [Complex64; 3],
}

impl Cp2Point {
    pub fn new(z: [Complex64; 3]) -> Result<Self, OrbitMapError> {
        let norm2: f64 = z.iter().map(|w| w.norm_sqr()).sum();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(OrbitMapError::NotNormalized { norm: norm2.sqrt() });
        }
        Ok(Cp2Point { z })
    }

    pub fn normalize(z: [Complex64; 3]) -> Result<Self, OrbitMapError> {
        let norm2: f64 = z.iter().map(|w| w.norm_sqr()).sum();
        if norm2 < 1e-300 {
            return Err(OrbitMapError::ZeroPoint);
        }
        let s = 1.0 / norm2.sqrt();
        Ok(Cp2Point { z: [z[0] * s, z[1] * s, z[2] * s] })
    }

    pub fn from_coords(c: &[f64]) -> Result<Self, OrbitMapError> {
        assert_eq!(c.len(), 6);
        Cp2Point::new([
            Complex64::new(c[0], c[1]),
            Complex64::new(c[2], c[3]),
            Complex64::new(c[4], c[5]),
        ])
    }

    pub fn coords(&self) -> [f64; 6] {
        [
            self.z[0].re, self.z[0].im, self.z[1].re, self.z[1].im, self.z[2].re, self.z[2].im,
        ]
    }
}

/// Phase rotation combined with optional conjugation.
pub fn act_cp2(p: &Cp2Point, phase: f64, conjugate: bool) -> Cp2Point {
    let t = Complex64::new(phase.cos(), phase.sin());
    let mut z = p.z;
    if conjugate {
        for w in z.iter_mut() {
            *w = w.conj();
        }
    }
    for w in z.iter_mut() {
        *w *= t;
    }
    Cp2Point { z }
}

/// Quotient of the projective plane by phase and conjugation: split
/// `z = x + iy` into real 3-vectors, stack them into a normalized 2x3
/// matrix and take its Gram image. The result is a trace-1 PSD matrix of
/// rank at most 2, i.e. a boundary point of the slice of the cone.
pub fn cp2_conj_to_s4(p: &Cp2Point) -> PsdMatrix {
    let b = DMatrix::from_fn(2, 3, |r, c| if r == 0 { p.z[c].re } else { p.z[c].im });
    let b = NormalizedMatrix::new(b).expect("unit homogeneous coordinates");
    quotient_yn1n_on(&b).expect("2x3 input")
}

/// Quotient of the flat 2-torus `R^2/Z^2` by the negation involution:
/// `(cos 2 pi x, cos 2 pi y, sin 2 pi x sin 2 pi y)`. The image is the
/// graph-double `w^2 = (1 - u^2)(1 - v^2)`, a sphere.
pub fn torus_invol_quotient(x: f64, y: f64) -> QuotientPoint {
    let (sx, cx) = (TAU * x).sin_cos();
    let (sy, cy) = (TAU * y).sin_cos();
    let w = sx * sy;
    let residual = (w * w - (1.0 - cx * cx) * (1.0 - cy * cy)).abs();
    QuotientPoint::new(vec![cx, cy, w], vec![("graph", residual)])
}

/// Quotient of the four-sphere `r^2 + |z1|^2 + |z2|^2 = 1` by coordinate
/// conjugation: real parts pass through, the imaginary pair `(y1, y2)` is
/// collapsed through its complex square `(y1^2 - y2^2, 2 y1 y2)`.
pub fn s4_invol_quotient(r: f64, z1: Complex64, z2: Complex64) -> QuotientPoint {
    let norm2 = r * r + z1.norm_sqr() + z2.norm_sqr();
    assert!((norm2 - 1.0).abs() <= NORM_TOL, "input must lie on the unit sphere");
    let (y1, y2) = (z1.im, z2.im);
    let q = (y1 * y1 - y2 * y2, 2.0 * y1 * y2);
    let residual = ((q.0 * q.0 + q.1 * q.1).sqrt() - (y1 * y1 + y2 * y2)).abs();
    QuotientPoint::new(
        vec![r, z1.re, z2.re, q.0, q.1],
        vec![("square_modulus", residual)],
    )
}
