//! The quaternionic projective plane, its torus action, and the composed
//! quotient map onto the five-sphere model.
//!
//! Points are homogeneous coordinate triples `[h0 : h1 : h2]` of
//! quaternions, defined up to a common unit quaternion factor on the right
//! and normalized so the coordinate norms square-sum to 1. The rank-3 torus
//! multiplies each coordinate on the left through the embedded circle.
//!
//! The quotient map factors exactly like the orbit space does: the column
//! norms `c_i` and the circle-quotient images `v_i` of the coordinates
//! assemble into a normalized 3x3 matrix (the join coordinates), and the
//! rotation quotient of that matrix space is the doubled-spectrahedron
//! sphere of [`crate::matrix::quotient_ynn_son`].

use super::{OrbitMapError, QuotientPoint, Sign};
use crate::algebra::{left_circle_on_quat, Quaternion, TorusElement, UnitQuaternion};
use crate::matrix::{quotient_ynn_son, NormalizedMatrix};
use nalgebra::DMatrix;

/// Default modulus threshold below which a coordinate is treated as lying
/// on a smaller stratum.
pub const DEFAULT_STRATUM_TOL: f64 = 1e-8;

const POINT_NORM_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hp2Point {
    h: [Quaternion; 3],
}

impl Hp2Point {
    /// Requires the coordinate norms to square-sum to 1 within `1e-12`.
    pub fn new(h: [Quaternion; 3]) -> Result<Self, OrbitMapError> {
        let norm2: f64 = h.iter().map(|q| q.norm_sq()).sum();
        if (norm2 - 1.0).abs() > POINT_NORM_TOL {
            return Err(OrbitMapError::NotNormalized { norm: norm2.sqrt() });
        }
        Ok(Hp2Point { h })
    }

    pub fn normalize(h: [Quaternion; 3]) -> Result<Self, OrbitMapError> {
        let norm2: f64 = h.iter().map(|q| q.norm_sq()).sum();
        if norm2 < 1e-300 {
            return Err(OrbitMapError::ZeroPoint);
        }
        let s = 1.0 / norm2.sqrt();
        Ok(Hp2Point { h: [h[0].scaled(s), h[1].scaled(s), h[2].scaled(s)] })
    }

    pub fn coordinates(&self) -> &[Quaternion; 3] {
        &self.h
    }

    pub fn from_coords(c: &[f64]) -> Result<Self, OrbitMapError> {
        assert_eq!(c.len(), 12, "an HP2 point has 12 real coordinates");
        Hp2Point::new([
            Quaternion::new(c[0], c[1], c[2], c[3]),
            Quaternion::new(c[4], c[5], c[6], c[7]),
            Quaternion::new(c[8], c[9], c[10], c[11]),
        ])
    }

    pub fn coords(&self) -> [f64; 12] {
        let mut out = [0.0; 12];
        for (i, q) in self.h.iter().enumerate() {
            out[4 * i..4 * i + 4].copy_from_slice(&q.coords());
        }
        out
    }

    /// The i-th fixed point of the torus action: the coordinate triple
    /// with a 1 in slot `i`.
    pub fn fixed_point(i: usize) -> Self {
        let mut h = [Quaternion::ZERO; 3];
        h[i] = Quaternion::ONE;
        Hp2Point { h }
    }
}

/// The circle quotient of the unit quaternions: for `h = (z, u)` returns
/// `(|z|^2 - |u|^2, Re(2zu), Im(2zu))`, a unit vector. The product `zu`
/// (rather than `z * conj(u)`) is forced by the left circle action
/// `(z, u) -> (tz, conj(t)u)`, which this map must collapse.
pub fn hopf(h: &UnitQuaternion) -> [f64; 3] {
    let (z, u) = h.split();
    let w = 2.0 * z * u;
    [z.norm_sqr() - u.norm_sqr(), w.re, w.im]
}

/// Join coordinates of a projective-plane point: the weights `c_i` (column
/// norms, `sum c_i^2 = 1`) and the circle-quotient images `v_i` of the
/// normalized coordinates. Coordinates of exact weight zero take a fixed
/// placeholder axis: the zero weight erases it from the assembled matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JoinCoordinates {
    pub weights: [f64; 3],
    pub factors: [[f64; 3]; 3],
}

impl JoinCoordinates {
    /// Assembles the 3x3 matrix with columns `c_i * v_i`.
    pub fn matrix(&self) -> NormalizedMatrix {
        let m = DMatrix::from_fn(3, 3, |r, c| self.weights[c] * self.factors[c][r]);
        NormalizedMatrix::normalize(m).expect("join matrix has unit norm")
    }
}

pub fn join_coordinates(p: &Hp2Point) -> JoinCoordinates {
    let mut weights = [0.0; 3];
    let mut factors = [[0.0; 3]; 3];
    for i in 0..3 {
        let c = p.h[i].norm();
        weights[i] = c;
        factors[i] = if c == 0.0 {
            [1.0, 0.0, 0.0]
        } else {
            hopf(&UnitQuaternion::new_normalize(p.h[i]).expect("nonzero coordinate"))
        };
    }
    JoinCoordinates { weights, factors }
}

/// The composed quotient map onto the doubled-spectrahedron sphere model:
/// coordinates are the six upper-triangle entries of the trace-1 polar
/// factor followed by the signed height.
pub fn hp2_to_s5(p: &Hp2Point) -> QuotientPoint {
    let join = join_coordinates(p);
    let d = quotient_ynn_son(&join.matrix()).expect("join matrix is square and normalized");
    let coords = d.flatten();
    let trace_residual = d.matrix().trace() - 1.0;
    QuotientPoint::new(
        coords,
        vec![
            ("height_vs_lambda_min", d.height_residual()),
            ("trace", trace_residual.abs()),
        ],
    )
}

/// Left action of the rank-3 torus on homogeneous coordinates.
pub fn act_t3(t: &TorusElement, p: &Hp2Point) -> Hp2Point {
    assert_eq!(t.rank(), 3, "the projective plane carries a rank-3 torus");
    let mut h = [Quaternion::ZERO; 3];
    for i in 0..3 {
        let circle = TorusElement::new(&[t.angle(i)]).expect("rank-1 slice");
        h[i] = left_circle_on_quat(&circle, &p.h[i]);
    }
    Hp2Point { h }
}

/// Right action by a unit quaternion on all coordinates simultaneously.
pub fn act_right_quat(p: &Hp2Point, q: &UnitQuaternion) -> Hp2Point {
    let qq = *q.as_quaternion();
    Hp2Point { h: [p.h[0] * qq, p.h[1] * qq, p.h[2] * qq] }
}

/// Distance between projective points: the chordal distance minimized over
/// the right unit-quaternion gauge. Equal to `sqrt(2 - 2 |<p, q>|)`, but
/// evaluated by aligning the gauge first so that nearby points measure at
/// full floating-point precision instead of sqrt-of-cancellation.
pub fn hp2_distance(p: &Hp2Point, q: &Hp2Point) -> f64 {
    let mut w = Quaternion::ZERO;
    for i in 0..3 {
        w = w + p.h[i].conj() * q.h[i];
    }
    let n = w.norm();
    if n < 1e-12 {
        // orthogonal representatives: maximal distance sqrt(2)
        return std::f64::consts::SQRT_2;
    }
    let gauge = w.scaled(1.0 / n);
    let mut d2 = 0.0;
    for i in 0..3 {
        d2 += (p.h[i] * gauge - q.h[i]).norm_sq();
    }
    d2.sqrt()
}

/// Strata of the torus action, named by the zero pattern of the complex
/// coordinate split after gauge fixing. `TwoSphere` and `ComplexPlane`
/// labels are canonical: the first nonzero slot carries sign `Plus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hp2Stratum {
    /// `v_i`: exactly one nonzero homogeneous coordinate.
    FixedPoint(usize),
    /// `S`: two nonzero coordinates, both of pure complex type.
    TwoSphere { first: (usize, Sign), second: (usize, Sign) },
    /// `M_{ij}`: two nonzero coordinates, at least one of mixed type.
    QuaternionicLine { pair: (usize, usize) },
    /// `N`: all coordinates nonzero and of pure type.
    ComplexPlane { signs: [Sign; 3] },
    /// Trivial stabilizer modulo the central element.
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StratumClassification {
    pub stratum: Hp2Stratum,
    /// True when some modulus was inside `(0, tol]`: the point only lies
    /// near the reported stratum, at distance `margin`.
    pub ambiguous: bool,
    /// Euclidean distance to the reported stratum (0 for exact members).
    pub margin: f64,
}

#[derive(Clone, Copy, PartialEq)]
enum CoordType {
    Zero,
    Pure(Sign),
    Mixed,
}

/// Gauge-fix the right quaternion action: divide on the right by the unit
/// quaternion making the first coordinate of norm above `tol` real
/// positive. Exact zero components stay exactly zero.
fn gauge_fix(p: &Hp2Point, tol: f64) -> [Quaternion; 3] {
    let g = (0..3)
        .find(|&i| p.h[i].norm() > tol)
        .expect("a normalized point has a coordinate of norm > tol");
    let n = p.h[g].norm();
    let q = p.h[g].conj().scaled(1.0 / n);
    let mut out = [Quaternion::ZERO; 3];
    for i in 0..3 {
        out[i] = if i == g {
            Quaternion::new(n, 0.0, 0.0, 0.0)
        } else {
            p.h[i] * q
        };
    }
    out
}

/// Classifies a point into the stratification of the torus action by the
/// zero pattern of its six complex coordinates after gauge fixing.
pub fn stratify_hp2(p: &Hp2Point, tol: f64) -> StratumClassification {
    assert!(tol > 0.0 && tol < 0.5, "stratum tolerance out of range");
    let fixed = gauge_fix(p, tol);
    let mut types = [CoordType::Zero; 3];
    let mut margin_sq = 0.0f64;
    let mut ambiguous = false;
    for i in 0..3 {
        let (z, u) = fixed[i].split();
        let (zm, um) = (z.norm(), u.norm());
        for m in [zm, um] {
            if m > 0.0 && m <= tol {
                ambiguous = true;
                margin_sq += m * m;
            }
        }
        types[i] = match (zm > tol, um > tol) {
            (false, false) => CoordType::Zero,
            (true, false) => CoordType::Pure(Sign::Plus),
            (false, true) => CoordType::Pure(Sign::Minus),
            (true, true) => CoordType::Mixed,
        };
    }

    let nonzero: Vec<usize> = (0..3)
        .filter(|&i| types[i] != CoordType::Zero)
        .collect();
    let stratum = match nonzero.as_slice() {
        [i] => Hp2Stratum::FixedPoint(*i),
        [i, j] => match (types[*i], types[*j]) {
            (CoordType::Pure(si), CoordType::Pure(sj)) => {
                Hp2Stratum::TwoSphere { first: (*i, si), second: (*j, sj) }
            }
            _ => Hp2Stratum::QuaternionicLine { pair: (*i, *j) },
        },
        [_, _, _] => {
            let signs: Option<Vec<Sign>> = types
                .iter()
                .map(|t| match t {
                    CoordType::Pure(s) => Some(*s),
                    _ => None,
                })
                .collect();
            match signs {
                Some(s) => Hp2Stratum::ComplexPlane { signs: [s[0], s[1], s[2]] },
                None => Hp2Stratum::Free,
            }
        }
        _ => unreachable!("a normalized point has 1..=3 nonzero coordinates"),
    };
    StratumClassification { stratum, ambiguous, margin: margin_sq.sqrt() }
}

/// Identity component of the stabilizer in the rank-3 torus. Every
/// stabilizer additionally contains the central element `(-1,-1,-1)`;
/// [`Hp2Stabilizer::contains_center`] records whether that element already
/// lies in the identity component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hp2Stabilizer {
    /// Fixed points: the full torus.
    FullTorus,
    /// Sphere strata: the 2-torus `{ t_i = t_j^(-1 if opposite) }`.
    TwoTorus { pair: (usize, usize), opposite: bool },
    /// Line and plane strata: the circle `{ (t^e0, t^e1, t^e2) }`.
    Circle { exponents: [i32; 3] },
    /// Free stratum: only the central order-2 element.
    CenterOnly,
}

impl Hp2Stabilizer {
    pub fn contains_center(&self) -> bool {
        match self {
            Hp2Stabilizer::FullTorus | Hp2Stabilizer::CenterOnly => true,
            Hp2Stabilizer::TwoTorus { .. } => true,
            Hp2Stabilizer::Circle { exponents } => exponents.iter().all(|&e| e != 0),
        }
    }
}

/// Stabilizer description of a point, read off its stratum: the free
/// coordinate circle on a quaternionic line, the sign-pattern circle on a
/// complex plane, and the degenerate cases at deeper strata.
pub fn hp2_stabilizer_check(p: &Hp2Point) -> Hp2Stabilizer {
    match stratify_hp2(p, DEFAULT_STRATUM_TOL).stratum {
        Hp2Stratum::FixedPoint(_) => Hp2Stabilizer::FullTorus,
        Hp2Stratum::TwoSphere { first: (i, si), second: (j, sj) } => {
            Hp2Stabilizer::TwoTorus { pair: (i, j), opposite: si != sj }
        }
        Hp2Stratum::QuaternionicLine { pair: (i, j) } => {
            let mut exponents = [0i32; 3];
            let free = 3 - i - j;
            exponents[free] = 1;
            Hp2Stabilizer::Circle { exponents }
        }
        Hp2Stratum::ComplexPlane { signs } => Hp2Stabilizer::Circle {
            exponents: [signs[0].as_i32(), signs[1].as_i32(), signs[2].as_i32()],
        },
        Hp2Stratum::Free => Hp2Stabilizer::CenterOnly,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn lcg(state: &mut u64) -> f64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (*state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    }

    fn random_point(state: &mut u64) -> Hp2Point {
        let h = [
            Quaternion::new(lcg(state), lcg(state), lcg(state), lcg(state)),
            Quaternion::new(lcg(state), lcg(state), lcg(state), lcg(state)),
            Quaternion::new(lcg(state), lcg(state), lcg(state), lcg(state)),
        ];
        Hp2Point::normalize(h).unwrap()
    }

    fn random_unit_quat(state: &mut u64) -> UnitQuaternion {
        UnitQuaternion::new_normalize(Quaternion::new(
            lcg(state),
            lcg(state),
            lcg(state),
            lcg(state),
        ))
        .unwrap()
    }

    #[test]
    fn hopf_poles_and_equator() {
        let one = UnitQuaternion::ONE;
        assert_eq!(hopf(&one), [1.0, 0.0, 0.0]);
        let j = UnitQuaternion::try_new(Quaternion::J).unwrap();
        assert_eq!(hopf(&j), [-1.0, 0.0, 0.0]);
        let half = UnitQuaternion::new_normalize(Quaternion::new(
            std::f64::consts::FRAC_1_SQRT_2,
            0.0,
            std::f64::consts::FRAC_1_SQRT_2,
            0.0,
        ))
        .unwrap();
        let v = hopf(&half);
        assert!((v[0]).abs() <= 1e-15);
        assert!((v[1] - 1.0).abs() <= 1e-12);
        assert!(v[2].abs() <= 1e-15);
    }

    #[test]
    fn hopf_is_left_circle_invariant_and_unit() {
        let mut state = 5u64;
        for _ in 0..2_000 {
            let h = random_unit_quat(&mut state);
            let v = hopf(&h);
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            assert!((n - 1.0).abs() <= 1e-12);
            let t = TorusElement::new(&[lcg(&mut state) * 10.0]).unwrap();
            let th = UnitQuaternion::new_normalize(left_circle_on_quat(&t, &h)).unwrap();
            let w = hopf(&th);
            let d = (0..3).map(|i| (v[i] - w[i]).powi(2)).sum::<f64>().sqrt();
            assert!(d <= 1e-12, "left circle moved the image by {d}");
        }
    }

    #[test]
    fn fixed_points_map_to_coordinate_projectors() {
        let img = hp2_to_s5(&Hp2Point::fixed_point(0));
        // upper triangle of diag(1,0,0) plus height 0
        let expected = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        for (a, b) in img.coords().iter().zip(expected.iter()) {
            assert!((a - b).abs() <= 1e-12);
        }
        // three fixed points land far apart
        let images: Vec<QuotientPoint> =
            (0..3).map(|i| hp2_to_s5(&Hp2Point::fixed_point(i))).collect();
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert!(images[i].distance(&images[j]) > 0.1);
            }
        }
    }

    #[test]
    fn invariance_under_torus_and_right_quaternion() {
        let mut state = 23u64;
        for _ in 0..500 {
            let p = random_point(&mut state);
            let img = hp2_to_s5(&p);

            let t = TorusElement::new(&[lcg(&mut state) * 10.0, lcg(&mut state) * 10.0, lcg(&mut state) * 10.0]).unwrap();
            let img_t = hp2_to_s5(&act_t3(&t, &p));
            assert!(img.distance(&img_t) <= 1e-9, "torus moved the image");

            let q = random_unit_quat(&mut state);
            let img_q = hp2_to_s5(&act_right_quat(&p, &q));
            assert!(img.distance(&img_q) <= 1e-9, "right quaternion moved the image");
        }
    }

    #[test]
    fn residuals_are_small_on_samples() {
        let mut state = 37u64;
        for _ in 0..500 {
            let p = random_point(&mut state);
            let img = hp2_to_s5(&p);
            assert!(img.residual("height_vs_lambda_min").unwrap() <= 1e-9);
            assert!(img.residual("trace").unwrap() <= 1e-12);
        }
    }

    #[test]
    fn zero_weight_column_is_exactly_zero() {
        let p = Hp2Point::normalize([Quaternion::ONE, Quaternion::ZERO, Quaternion::new(0.0, 1.0, 0.0, 0.0)]).unwrap();
        let join = join_coordinates(&p);
        assert_eq!(join.weights[1], 0.0);
        let m = join.matrix();
        for r in 0..3 {
            assert_eq!(m.matrix()[(r, 1)], 0.0);
        }
    }

    #[test]
    fn stratify_fixed_point_and_spheres() {
        let c = stratify_hp2(&Hp2Point::fixed_point(0), DEFAULT_STRATUM_TOL);
        assert_eq!(c.stratum, Hp2Stratum::FixedPoint(0));
        assert!(!c.ambiguous);

        let s = 0.5f64.sqrt();
        let p = Hp2Point::new([
            Quaternion::new(s, 0.0, 0.0, 0.0),
            Quaternion::new(s, 0.0, 0.0, 0.0),
            Quaternion::ZERO,
        ])
        .unwrap();
        let c = stratify_hp2(&p, DEFAULT_STRATUM_TOL);
        assert_eq!(
            c.stratum,
            Hp2Stratum::TwoSphere { first: (0, Sign::Plus), second: (1, Sign::Plus) }
        );
        assert!(!c.ambiguous);

        // mixed-sign sphere: second coordinate of pure j-type
        let p = Hp2Point::new([
            Quaternion::new(s, 0.0, 0.0, 0.0),
            Quaternion::new(0.0, 0.0, s, 0.0),
            Quaternion::ZERO,
        ])
        .unwrap();
        let c = stratify_hp2(&p, DEFAULT_STRATUM_TOL);
        assert_eq!(
            c.stratum,
            Hp2Stratum::TwoSphere { first: (0, Sign::Plus), second: (1, Sign::Minus) }
        );
    }

    #[test]
    fn stratify_gauge_reveals_pure_structure() {
        // a complex-plane point hidden behind a generic right gauge factor
        let mut state = 61u64;
        let q = random_unit_quat(&mut state).into_inner();
        let z0 = Complex64::new(0.5, 0.3);
        let z1 = Complex64::new(-0.2, 0.6);
        let u2 = Complex64::new(0.4, -0.1);
        let h = [
            Quaternion::from_complex(z0) * q,
            Quaternion::from_complex(z1) * q,
            (Quaternion::J * Quaternion::from_complex(u2)) * q,
        ];
        let p = Hp2Point::normalize(h).unwrap();
        let c = stratify_hp2(&p, DEFAULT_STRATUM_TOL);
        assert_eq!(
            c.stratum,
            Hp2Stratum::ComplexPlane { signs: [Sign::Plus, Sign::Plus, Sign::Minus] }
        );
        // rounding leaves the point a hair off the stratum
        assert!(c.margin <= 1e-12);
    }

    #[test]
    fn stratify_generic_point_is_free() {
        let mut state = 71u64;
        for _ in 0..100 {
            let p = random_point(&mut state);
            let c = stratify_hp2(&p, DEFAULT_STRATUM_TOL);
            assert_eq!(c.stratum, Hp2Stratum::Free);
            assert!(!c.ambiguous);
        }
    }

    #[test]
    fn stabilizers_by_stratum() {
        // quaternionic line M_{01}: circle with the third coordinate free
        let p = Hp2Point::normalize([
            Quaternion::new(0.3, 0.1, -0.2, 0.5),
            Quaternion::new(-0.4, 0.2, 0.6, 0.1),
            Quaternion::ZERO,
        ])
        .unwrap();
        assert_eq!(
            hp2_stabilizer_check(&p),
            Hp2Stabilizer::Circle { exponents: [0, 0, 1] }
        );

        // complex plane with signs (+,+,-): circle t0 = t1 = t2^{-1}
        let p = Hp2Point::normalize([
            Quaternion::from_complex(Complex64::new(0.5, 0.2)),
            Quaternion::from_complex(Complex64::new(-0.3, 0.4)),
            Quaternion::J * Quaternion::from_complex(Complex64::new(0.1, 0.6)),
        ])
        .unwrap();
        let stab = hp2_stabilizer_check(&p);
        assert_eq!(stab, Hp2Stabilizer::Circle { exponents: [1, 1, -1] });
        assert!(stab.contains_center());

        // generic point: only the center
        let mut state = 83u64;
        let p = random_point(&mut state);
        assert_eq!(hp2_stabilizer_check(&p), Hp2Stabilizer::CenterOnly);
    }

    #[test]
    fn circle_stabilizers_fix_their_points() {
        // the exponent circle of an M/N stratum actually stabilizes
        let p = Hp2Point::normalize([
            Quaternion::from_complex(Complex64::new(0.5, 0.2)),
            Quaternion::from_complex(Complex64::new(-0.3, 0.4)),
            Quaternion::J * Quaternion::from_complex(Complex64::new(0.1, 0.6)),
        ])
        .unwrap();
        if let Hp2Stabilizer::Circle { exponents } = hp2_stabilizer_check(&p) {
            for step in 0..8 {
                let theta = step as f64 * 0.7;
                let t = TorusElement::new(&[
                    exponents[0] as f64 * theta,
                    exponents[1] as f64 * theta,
                    exponents[2] as f64 * theta,
                ])
                .unwrap();
                assert!(hp2_distance(&act_t3(&t, &p), &p) <= 1e-12);
            }
        } else {
            panic!("expected a circle stabilizer");
        }
    }
}
