//! Three-colored polygons encoding locally standard sphere-group actions
//! on 8-manifolds, their torus weights and cohomology ranks.
//!
//! Sides carry one of the three distinguished 3-sphere subgroups of the
//! product of two: the coordinate factors `S1`, `S2` and the diagonal
//! `S12`. Adjacent sides must differ. The two coordinate colors are
//! interchangeable by an automorphism of the product group; the diagonal
//! is not (its conjugacy class is infinite while the coordinate classes
//! are singletons), so symmetry reduction may swap `S1 <-> S2` and apply
//! polygon symmetries but never moves `S12`.

use super::{ModelError, Polygon, PolygonPoint};
use crate::algebra::{Quaternion, UnitQuaternion};
use crate::orbit_maps::S3S3Chart;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuoricColor {
    S1,
    S2,
    S12,
}

impl QuoricColor {
    pub const ALL: [QuoricColor; 3] = [QuoricColor::S1, QuoricColor::S2, QuoricColor::S12];

    fn swapped(self) -> Self {
        match self {
            QuoricColor::S1 => QuoricColor::S2,
            QuoricColor::S2 => QuoricColor::S1,
            QuoricColor::S12 => QuoricColor::S12,
        }
    }
}

impl fmt::Display for QuoricColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuoricColor::S1 => write!(f, "S1"),
            QuoricColor::S2 => write!(f, "S2"),
            QuoricColor::S12 => write!(f, "S12"),
        }
    }
}

impl FromStr for QuoricColor {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, ModelError> {
        match s.trim() {
            "S1" => Ok(QuoricColor::S1),
            "S2" => Ok(QuoricColor::S2),
            "S12" => Ok(QuoricColor::S12),
            other => Err(ModelError::Parse {
                kind: "color",
                text: other.to_string(),
                reason: "expected S1, S2 or S12".to_string(),
            }),
        }
    }
}

/// A polygon with colored sides; properness is checked separately by
/// [`quoric_coloring_valid`], so invalid colorings can be represented and
/// rejected.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuoricFunctor {
    polygon_sides: usize,
    colors: Vec<QuoricColor>,
}

impl QuoricFunctor {
    pub fn new(polygon: Polygon, colors: Vec<QuoricColor>) -> Result<Self, ModelError> {
        if colors.len() != polygon.sides() {
            return Err(ModelError::LabelCount { m: polygon.sides(), got: colors.len() });
        }
        Ok(QuoricFunctor { polygon_sides: polygon.sides(), colors })
    }

    pub fn polygon(&self) -> Polygon {
        Polygon::new(self.polygon_sides).expect("validated at construction")
    }

    pub fn colors(&self) -> &[QuoricColor] {
        &self.colors
    }

    pub fn color(&self, side: usize) -> QuoricColor {
        self.colors[side]
    }
}

/// Line format: `m; c0 c1 ...` with colors `S1|S2|S12`.
impl fmt::Display for QuoricFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.polygon_sides)?;
        for c in &self.colors {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

impl FromStr for QuoricFunctor {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, ModelError> {
        let parse_err = |reason: &str| ModelError::Parse {
            kind: "coloring",
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let (head, tail) = s.split_once(';').ok_or_else(|| parse_err("missing ';'"))?;
        let m: usize = head.trim().parse().map_err(|_| parse_err("bad side count"))?;
        let polygon = Polygon::new(m)?;
        let colors = tail
            .split_whitespace()
            .map(QuoricColor::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        QuoricFunctor::new(polygon, colors)
    }
}

/// Proper cyclic coloring: adjacent sides (including the wrap-around pair)
/// carry distinct colors.
pub fn quoric_coloring_valid(qf: &QuoricFunctor) -> bool {
    let m = qf.polygon_sides;
    (0..m).all(|i| qf.colors[i] != qf.colors[(i + 1) % m])
}

/// Symmetry used to reduce enumerated colorings. The diagonal color is
/// never permuted with the coordinate colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryReduction {
    /// All proper colorings.
    Raw,
    /// Quotient by the coordinate swap `S1 <-> S2`.
    Swap12,
    /// Quotient by the dihedral symmetries of the polygon and the swap.
    DihedralSwap12,
}

fn orbit_variants(colors: &[QuoricColor], symmetry: SymmetryReduction) -> Vec<Vec<QuoricColor>> {
    let m = colors.len();
    let mut out = Vec::new();
    let swaps: &[bool] = match symmetry {
        SymmetryReduction::Raw => &[false],
        _ => &[false, true],
    };
    for &swap in swaps {
        let base: Vec<QuoricColor> = colors
            .iter()
            .map(|&c| if swap { c.swapped() } else { c })
            .collect();
        match symmetry {
            SymmetryReduction::Raw | SymmetryReduction::Swap12 => out.push(base),
            SymmetryReduction::DihedralSwap12 => {
                for r in 0..m {
                    let rotated: Vec<QuoricColor> = (0..m).map(|i| base[(i + r) % m]).collect();
                    let reflected: Vec<QuoricColor> =
                        (0..m).map(|i| base[(m + r - i) % m]).collect();
                    out.push(rotated);
                    out.push(reflected);
                }
            }
        }
    }
    out
}

fn is_canonical(colors: &[QuoricColor], symmetry: SymmetryReduction) -> bool {
    orbit_variants(colors, symmetry)
        .iter()
        .all(|v| colors <= v.as_slice())
}

/// Enumerates proper colorings of the `m`-gon, reduced by the requested
/// symmetry (canonical representatives are the lexicographically minimal
/// members of their orbits). Results are sorted and deterministic.
pub fn enumerate_quoric(
    m: usize,
    symmetry: SymmetryReduction,
) -> Result<Vec<QuoricFunctor>, ModelError> {
    let polygon = Polygon::new(m)?;
    let mut out = Vec::new();
    let mut stack: Vec<QuoricColor> = Vec::with_capacity(m);
    fn rec(
        m: usize,
        stack: &mut Vec<QuoricColor>,
        out: &mut Vec<Vec<QuoricColor>>,
    ) {
        if stack.len() == m {
            if stack[0] != stack[m - 1] {
                out.push(stack.clone());
            }
            return;
        }
        for c in QuoricColor::ALL {
            if let Some(&last) = stack.last() {
                if last == c {
                    continue;
                }
            }
            stack.push(c);
            rec(m, stack, out);
            stack.pop();
        }
    }
    let mut raw = Vec::new();
    rec(m, &mut stack, &mut raw);
    for colors in raw {
        if is_canonical(&colors, symmetry) {
            out.push(QuoricFunctor::new(polygon, colors)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Tangent weights at a fixed point, integer vectors in the weight lattice
/// of the acting torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    pub weights: Vec<Vec<i64>>,
}

/// General position for a complexity-one action: every `(n-1)`-subset of
/// the `n` weights is linearly independent.
pub fn general_position_check(ws: &WeightSet) -> bool {
    let n = ws.weights.len();
    if n == 0 {
        return true;
    }
    let take = n - 1;
    if take > ws.weights[0].len() {
        return false;
    }
    (0..n).all(|skip| {
        let subset: Vec<&Vec<i64>> = ws
            .weights
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, w)| w)
            .collect();
        integer_rank(&subset) == take
    })
}

/// Rank over the rationals by fraction-free elimination.
fn integer_rank(rows: &[&Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut col = 0;
    while rank < m.len() && col < cols {
        if let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) {
            m.swap(rank, pivot);
            for r in (rank + 1)..m.len() {
                if m[r][col] != 0 {
                    let (a, b) = (m[rank][col], m[r][col]);
                    for c in col..cols {
                        m[r][c] = m[r][c] * a - m[rank][c] * b;
                    }
                }
            }
            rank += 1;
        }
        col += 1;
    }
    rank
}

/// Weight data at a vertex of a colored polygon: the quadruple of tangent
/// weights of the rank-3 torus action in the local standard chart, the
/// chart kind, and the relabeling applied to the torus coordinates to
/// match the standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexWeights {
    pub weights: WeightSet,
    pub chart: S3S3Chart,
    /// `torus_relabeling[i]` is the standard-chart circle playing the role
    /// of local circle `i`; identity except at diagonal-colored vertices
    /// where the coordinate factors trade places.
    pub torus_relabeling: [usize; 3],
}

/// The standard weight quadruple of chart A, `(t1 s1 t3, t2 s2 t3)`.
pub fn chart_a_weights() -> WeightSet {
    WeightSet {
        weights: vec![
            vec![1, 0, 1],
            vec![1, 0, -1],
            vec![0, 1, 1],
            vec![0, 1, -1],
        ],
    }
}

/// The standard weight quadruple of chart B, `(t1 s1 t2^{-1}, t2 s2 t3)`.
pub fn chart_b_weights() -> WeightSet {
    WeightSet {
        weights: vec![
            vec![1, -1, 0],
            vec![1, 1, 0],
            vec![0, 1, 1],
            vec![0, 1, -1],
        ],
    }
}

pub fn chart_weights(chart: S3S3Chart) -> WeightSet {
    match chart {
        S3S3Chart::A => chart_a_weights(),
        S3S3Chart::B => chart_b_weights(),
    }
}

/// The tangent weights of the torus action at a vertex. Vertices whose two
/// side colors are the coordinate pair use chart A; vertices involving the
/// diagonal color use chart B after relabeling the coordinate circles so
/// that the diagonal subgroup matches the standard form.
pub fn quoric_weights(qf: &QuoricFunctor, vertex: usize) -> Result<VertexWeights, ModelError> {
    let p = qf.polygon();
    PolygonPoint::Vertex(vertex).validate(&p)?;
    let (i, j) = p.sides_at_vertex(vertex);
    let pair = (qf.color(i), qf.color(j));
    use QuoricColor::*;
    let (chart, relabeling) = match pair {
        (S1, S2) | (S2, S1) => (S3S3Chart::A, [0usize, 1, 2]),
        (S1, S12) | (S12, S1) => (S3S3Chart::B, [0, 1, 2]),
        (S2, S12) | (S12, S2) => (S3S3Chart::B, [1, 0, 2]),
        (a, b) => {
            return Err(ModelError::UnsupportedChart { vertex, first: a, second: b });
        }
    };
    let standard = match chart {
        S3S3Chart::A => chart_a_weights(),
        S3S3Chart::B => chart_b_weights(),
    };
    let weights = WeightSet {
        weights: standard
            .weights
            .iter()
            .map(|w| {
                let mut out = vec![0i64; 3];
                for (local, &std_idx) in relabeling.iter().enumerate() {
                    out[local] = w[std_idx];
                }
                out
            })
            .collect(),
    };
    Ok(VertexWeights { weights, chart, torus_relabeling: relabeling })
}

/// Combinatorial h-vector of the polygon, computed from the face counts
/// through the generating-polynomial shift. For an `m`-gon this is
/// `(1, m-2, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<i64>);

pub fn h_vector(p: &Polygon) -> HVector {
    // f = (f_{-1}, f_0, f_1) = (1, m, m); h_k are the coefficients of
    // sum_i f_{i-1} (t - 1)^{n - i} read from degree n downwards.
    let n = 2usize;
    let f = [1i64, p.sides() as i64, p.sides() as i64];
    let mut coeffs = vec![0i64; n + 1];
    for (i, &fi) in f.iter().enumerate() {
        // (t - 1)^(n - i), binomial expansion
        let deg = n - i;
        for k in 0..=deg {
            let sign = if (deg - k) % 2 == 0 { 1 } else { -1 };
            coeffs[k] += fi * sign * binomial(deg, k);
        }
    }
    // coefficient of t^(n - k) is h_k
    HVector((0..=n).map(|k| coeffs[n - k]).collect())
}

fn binomial(n: usize, k: usize) -> i64 {
    let mut out = 1i64;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as i64 / (i + 1) as i64;
    }
    out
}

/// Cohomology ranks of the 8-manifold modeled on the coloring: nonzero
/// only in degrees 0, 4, 8 where they equal the h-vector entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuoricBetti {
    pub b0: i64,
    pub b4: i64,
    pub b8: i64,
}

impl QuoricBetti {
    pub fn rank(&self, degree: usize) -> i64 {
        match degree {
            0 => self.b0,
            4 => self.b4,
            8 => self.b8,
            _ => 0,
        }
    }
}

pub fn quoric_betti(qf: &QuoricFunctor) -> QuoricBetti {
    let h = h_vector(&qf.polygon());
    QuoricBetti { b0: h.0[0], b4: h.0[1], b8: h.0[2] }
}

/// Fiber of the torus orbit map over a point of the polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuoricFiberType {
    /// Vertex: a point.
    Point,
    /// Side: an interval (the biaxial quotient of the residual sphere).
    IntervalQuotient,
    /// Interior: the 3-sphere model of the product quotient.
    SphereQuotient,
}

pub fn quoric_fiber_type(
    qf: &QuoricFunctor,
    x: &PolygonPoint,
) -> Result<QuoricFiberType, ModelError> {
    x.validate(&qf.polygon())?;
    Ok(match x {
        PolygonPoint::Vertex(_) => QuoricFiberType::Point,
        PolygonPoint::Side(_) => QuoricFiberType::IntervalQuotient,
        PolygonPoint::Interior => QuoricFiberType::SphereQuotient,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuoricViolation {
    pub side: Option<usize>,
    pub detail: String,
}

/// Samples the stability of the characteristic subgroups under conjugation
/// by diagonal circle elements, the condition making the extra circle of
/// the rank-3 action descend to the identification space.
///
/// Coordinate factors are checked structurally: conjugating `(s, 1)` or
/// `(1, s)` leaves the identity slot with exactly zero imaginary part (the
/// symmetric products cancel exactly in floating point). The diagonal is
/// checked by conjugating both slots with the same element: the results
/// are identical computations, so membership is preserved bit for bit.
pub fn quoric_t3_welldef(
    qf: &QuoricFunctor,
    samples: usize,
    seed: u64,
) -> Result<(), QuoricViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = qf.polygon().sides();
    let random_unit = |rng: &mut ChaCha8Rng| {
        UnitQuaternion::new_normalize(Quaternion::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ))
        .expect("nonzero")
    };
    let conj = |s: &Quaternion, t: &Quaternion| (t.conj() * *s) * *t;
    for n in 0..samples {
        let side = n % m;
        let s = random_unit(&mut rng).into_inner();
        let theta: f64 = rng.random_range(-10.0..10.0);
        let t = Quaternion::new(theta.cos(), theta.sin(), 0.0, 0.0);
        match qf.color(side) {
            QuoricColor::S1 | QuoricColor::S2 => {
                // the identity slot of a coordinate-factor member
                let fixed = conj(&Quaternion::ONE, &t);
                if fixed.b != 0.0 || fixed.c != 0.0 || fixed.d != 0.0 {
                    return Err(QuoricViolation {
                        side: Some(side),
                        detail: "conjugation moved the identity slot".to_string(),
                    });
                }
                // the moving slot stays a unit quaternion
                let moved = conj(&s, &t);
                if (moved.norm_sq() - 1.0).abs() > 1e-12 {
                    return Err(QuoricViolation {
                        side: Some(side),
                        detail: "conjugation broke the unit norm".to_string(),
                    });
                }
            }
            QuoricColor::S12 => {
                let first = conj(&s, &t);
                let second = conj(&s, &t);
                if first != second {
                    return Err(QuoricViolation {
                        side: Some(side),
                        detail: "diagonal member left the diagonal".to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}
