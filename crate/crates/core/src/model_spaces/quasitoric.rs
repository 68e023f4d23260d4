//! Characteristic pairs over polygons and the conjugation involution on
//! their model spaces.
//!
//! A characteristic pair assigns to each side a primitive integer vector,
//! the weight of the circle subgroup stabilizing that side's preimage in
//! the model space `(P x T^2) / ~`. The basis condition at the corners —
//! adjacent labels spanning the lattice — is exactly `|det| = 1` on each
//! adjacent pair.

use super::{ModelError, Polygon, PolygonPoint};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq)]
pub struct QtCharPair {
    polygon: Polygon,
    lambda: Vec<[i64; 2]>,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl QtCharPair {
    pub fn new(polygon: Polygon, lambda: Vec<[i64; 2]>) -> Result<Self, ModelError> {
        if lambda.len() != polygon.sides() {
            return Err(ModelError::LabelCount { m: polygon.sides(), got: lambda.len() });
        }
        for (side, &[a, b]) in lambda.iter().enumerate() {
            if gcd(a, b) != 1 {
                return Err(ModelError::NotPrimitive { side, a, b });
            }
        }
        Ok(QtCharPair { polygon, lambda })
    }

    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    pub fn label(&self, side: usize) -> [i64; 2] {
        self.lambda[side]
    }

    pub fn labels(&self) -> &[[i64; 2]] {
        &self.lambda
    }
}

/// Line format: `m; a0,b0 a1,b1 ...`.
impl fmt::Display for QtCharPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.polygon.sides())?;
        for &[a, b] in &self.lambda {
            write!(f, " {a},{b}")?;
        }
        Ok(())
    }
}

impl FromStr for QtCharPair {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        let parse_err = |reason: &str| ModelError::Parse {
            kind: "characteristic pair",
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let (head, tail) = s.split_once(';').ok_or_else(|| parse_err("missing ';'"))?;
        let m: usize = head.trim().parse().map_err(|_| parse_err("bad side count"))?;
        let polygon = Polygon::new(m)?;
        let mut lambda = Vec::new();
        for tok in tail.split_whitespace() {
            let (a, b) = tok.split_once(',').ok_or_else(|| parse_err("label needs 'a,b'"))?;
            let a: i64 = a.trim().parse().map_err(|_| parse_err("bad integer"))?;
            let b: i64 = b.trim().parse().map_err(|_| parse_err("bad integer"))?;
            lambda.push([a, b]);
        }
        QtCharPair::new(polygon, lambda)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCheck {
    pub satisfied: bool,
    /// Vertices whose adjacent labels do not span the lattice.
    pub violations: Vec<usize>,
}

/// The basis condition: every adjacent label pair has determinant +-1.
pub fn star_condition_check(cp: &QtCharPair) -> StarCheck {
    let m = cp.polygon().sides();
    let mut violations = Vec::new();
    for v in 0..m {
        let (i, j) = cp.polygon().sides_at_vertex(v);
        let [a, b] = cp.label(i);
        let [c, d] = cp.label(j);
        if (a * d - b * c).abs() != 1 {
            violations.push(v);
        }
    }
    StarCheck { satisfied: violations.is_empty(), violations }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvolutionViolation {
    pub side: usize,
    pub detail: String,
}

/// Verifies on sampled equivalent pairs of the model space that coordinate
/// conjugation descends through the identifications: if two torus
/// representatives over a boundary point differ by an element of the
/// side's characteristic circle, so do their conjugates.
///
/// Membership is checked two ways: exactly on the angle parametrization
/// (the circle of weight `(a, b)` is `theta -> (a theta, b theta)`, and
/// conjugation negates angles), and numerically through the character
/// `w1^b = w2^a` that cuts out the circle for a primitive weight.
pub fn conj_involution_welldef(
    cp: &QtCharPair,
    samples: usize,
    seed: u64,
) -> Result<(), InvolutionViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = cp.polygon().sides();
    for n in 0..samples {
        let side = n % m;
        let [a, b] = cp.label(side);
        let phi: f64 = rng.random_range(-10.0..10.0);
        // representative difference tau = circle(phi); conjugation sends it
        // to the circle value at -phi, exactly
        let tau = (a as f64 * phi, b as f64 * phi);
        let conj_tau = (-tau.0, -tau.1);
        let at_minus_phi = (a as f64 * -phi, b as f64 * -phi);
        if conj_tau != at_minus_phi {
            return Err(InvolutionViolation {
                side,
                detail: format!("angle arithmetic mismatch at phi = {phi}"),
            });
        }
        // numeric route: the conjugated pair satisfies the cutting character
        let w1 = num_complex::Complex64::from_polar(1.0, conj_tau.0.rem_euclid(TAU));
        let w2 = num_complex::Complex64::from_polar(1.0, conj_tau.1.rem_euclid(TAU));
        let lhs = w1.powi(b as i32);
        let rhs = w2.powi(a as i32);
        if (lhs - rhs).norm() > 1e-9 {
            return Err(InvolutionViolation {
                side,
                detail: format!(
                    "character residual {} at phi = {phi}",
                    (lhs - rhs).norm()
                ),
            });
        }
    }
    Ok(())
}

/// Fiber of the involution quotient over a point of the polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaFiberType {
    /// Interior: a full torus collapsed by negation, a 2-sphere (the image
    /// of [`crate::orbit_maps::torus_invol_quotient`]).
    Sphere,
    /// Side: a circle collapsed by a reflection, an interval.
    Interval,
    /// Vertex: a point.
    Point,
}

pub fn sigma_fiber_type(cp: &QtCharPair, x: &PolygonPoint) -> Result<SigmaFiberType, ModelError> {
    x.validate(cp.polygon())?;
    Ok(match x {
        PolygonPoint::Interior => SigmaFiberType::Sphere,
        PolygonPoint::Side(_) => SigmaFiberType::Interval,
        PolygonPoint::Vertex(_) => SigmaFiberType::Point,
    })
}
