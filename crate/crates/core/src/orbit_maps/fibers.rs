//! Fiberwise quotients of unit-quaternion spheres by tori and circles.
//!
//! These are the local models gluing into the polygon-fibered orbit
//! spaces: the biaxial interval quotient of a single 3-sphere, the rank-3
//! torus quotient of a product of two 3-spheres (two charts, matching the
//! two standard local actions), and the conjugation circle quotients.
//!
//! The invariant coordinates were found by solving the integer weight
//! system of each action on the complex splits `s = (z, u)`: moduli carry
//! the weights of the acting torus away, and the phase block is the
//! lowest-degree monomial of weight zero. Each map records the modulus
//! constraint tying the phase block to the moduli; those constraints cut
//! out the claimed interval, sphere or disk model.

use super::{QuotientPoint, Sign};
use crate::algebra::{Quaternion, TorusElement, UnitQuaternion};
use num_complex::Complex64;

fn circle(theta: f64) -> Complex64 {
    Complex64::new(theta.cos(), theta.sin())
}

/// Quotient of the 3-sphere by the biaxial torus action
/// `s -> t1^(e1) s t2^(e2)`: the squared moduli `(|z|^2, |u|^2)`, a point
/// of the interval `c1 + c2 = 1`. The image does not depend on the sign
/// chart; the chart selects which action the invariance tests exercise.
pub fn s3_biaxial_quotient(s: &UnitQuaternion, _chart: (Sign, Sign)) -> QuotientPoint {
    let (z, u) = s.split();
    let (c1, c2) = (z.norm_sqr(), u.norm_sqr());
    QuotientPoint::new(vec![c1, c2], vec![("affine", (c1 + c2 - 1.0).abs())])
}

/// The biaxial action `s -> t1^(e1) s t2^(e2)`.
pub fn act_biaxial(
    s: &UnitQuaternion,
    chart: (Sign, Sign),
    theta1: f64,
    theta2: f64,
) -> UnitQuaternion {
    let t1 = circle(theta1 * chart.0.as_f64());
    let t2 = circle(theta2 * chart.1.as_f64());
    let (z, u) = s.split();
    // left factor acts as (t1 z, conj(t1) u), right factor as (z t2, u t2)
    let q = Quaternion::from_split(t1 * z * t2, t1.conj() * u * t2);
    UnitQuaternion::new_normalize(q).expect("unit product")
}

/// The two standard rank-3 torus actions on a product of two 3-spheres.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S3S3Chart {
    /// `(t1 s1 t3, t2 s2 t3)`
    A,
    /// `(t1 s1 t2^{-1}, t2 s2 t3)`
    B,
}

/// Quotient of the product of two 3-spheres by the rank-3 action of the
/// chart: `(c1, c2, Re p, Im p)` with `c_i = |z_i|^2` and `p` the invariant
/// phase monomial of the chart. The modulus constraint
/// `|p| = sqrt(c1 (1 - c1) c2 (1 - c2))` exhibits the image as the double
/// of the square, a 3-sphere.
pub fn s3s3_t3_quotient(
    s1: &UnitQuaternion,
    s2: &UnitQuaternion,
    chart: S3S3Chart,
) -> QuotientPoint {
    let (z1, u1) = s1.split();
    let (z2, u2) = s2.split();
    let (c1, c2) = (z1.norm_sqr(), z2.norm_sqr());
    let p = match chart {
        S3S3Chart::A => z1 * u1 * (z2 * u2).conj(),
        S3S3Chart::B => z1 * u1 * z2 * u2.conj(),
    };
    let bound = (c1 * (1.0 - c1)).max(0.0) * (c2 * (1.0 - c2)).max(0.0);
    let residual = (p.norm() - bound.sqrt()).abs();
    QuotientPoint::new(vec![c1, c2, p.re, p.im], vec![("radius", residual)])
}

/// The chart action on the product of spheres.
pub fn act_s3s3_t3(
    s1: &UnitQuaternion,
    s2: &UnitQuaternion,
    chart: S3S3Chart,
    t: &TorusElement,
) -> (UnitQuaternion, UnitQuaternion) {
    assert_eq!(t.rank(), 3);
    let (z1, u1) = s1.split();
    let (z2, u2) = s2.split();
    let (t1, t2, t3) = (t.component(0), t.component(1), t.component(2));
    let (a1, b1) = match chart {
        // s1 -> t1 s1 t3
        S3S3Chart::A => (t1 * z1 * t3, t1.conj() * u1 * t3),
        // s1 -> t1 s1 t2^{-1}
        S3S3Chart::B => (t1 * z1 * t2.conj(), t1.conj() * u1 * t2.conj()),
    };
    // s2 -> t2 s2 t3 in both charts
    let (a2, b2) = (t2 * z2 * t3, t2.conj() * u2 * t3);
    (
        UnitQuaternion::new_normalize(Quaternion::from_split(a1, b1)).expect("unit"),
        UnitQuaternion::new_normalize(Quaternion::from_split(a2, b2)).expect("unit"),
    )
}

/// Quotient of the 3-sphere by conjugation with the complex circle:
/// `(a, b, sqrt(c^2 + d^2))`, the closed upper hemisphere, a disk.
pub fn s3_conj_circle_quotient(h: &UnitQuaternion) -> QuotientPoint {
    let m = (h.c * h.c + h.d * h.d).sqrt();
    let norm2 = h.a * h.a + h.b * h.b + m * m;
    QuotientPoint::new(
        vec![h.a, h.b, m],
        vec![("unit_norm", (norm2 - 1.0).abs())],
    )
}

/// Conjugation `h -> t h t^{-1}` by the unit complex number of angle
/// `theta`.
pub fn act_conj_circle(h: &UnitQuaternion, theta: f64) -> UnitQuaternion {
    let t = Quaternion::new(theta.cos(), theta.sin(), 0.0, 0.0);
    let q = (t * *h.as_quaternion()) * t.conj();
    UnitQuaternion::new_normalize(q).expect("unit conjugate")
}

/// Quotient of the product of two 3-spheres by simultaneous conjugation:
/// the fixed complex parts of both factors plus the relative phase
/// `w = (c1 + i d1) conj(c2 + i d2)` of the rotating planes. The modulus
/// constraint `|w| = m1 m2` makes the image a 5-sphere model.
pub fn s3s3_diag_circle_quotient(h1: &UnitQuaternion, h2: &UnitQuaternion) -> QuotientPoint {
    let v1 = Complex64::new(h1.c, h1.d);
    let v2 = Complex64::new(h2.c, h2.d);
    let w = v1 * v2.conj();
    let residual = (w.norm() - v1.norm() * v2.norm()).abs();
    QuotientPoint::new(
        vec![h1.a, h1.b, h2.a, h2.b, w.re, w.im],
        vec![("modulus_product", residual)],
    )
}

/// Simultaneous conjugation of both factors.
pub fn act_diag_circle(
    h1: &UnitQuaternion,
    h2: &UnitQuaternion,
    theta: f64,
) -> (UnitQuaternion, UnitQuaternion) {
    (act_conj_circle(h1, theta), act_conj_circle(h2, theta))
}
