//! Combinatorial model spaces over polygons: characteristic pairs for
//! half-dimensional torus actions and 3-colorings for their quaternionic
//! analogues.
//!
//! Polygons are purely combinatorial here: a cyclic list of `m >= 3`
//! sides. Vertex `v` is the corner shared by sides `v` and `(v + 1) mod m`.

mod quasitoric;
mod quoric;

pub use quasitoric::{
    conj_involution_welldef, sigma_fiber_type, star_condition_check, InvolutionViolation,
    QtCharPair, SigmaFiberType, StarCheck,
};
pub use quoric::{
    chart_a_weights, chart_b_weights, chart_weights, enumerate_quoric, general_position_check,
    h_vector, quoric_betti, quoric_coloring_valid, quoric_fiber_type, quoric_t3_welldef,
    quoric_weights, HVector, QuoricBetti, QuoricColor, QuoricFiberType, QuoricFunctor,
    QuoricViolation, SymmetryReduction, VertexWeights, WeightSet,
};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ModelError {
    #[error("a polygon needs at least 3 sides, got {m}")]
    TooFewSides { m: usize },
    #[error("{got} side labels for an {m}-gon")]
    LabelCount { m: usize, got: usize },
    #[error("side {side}: label ({a}, {b}) is not a primitive integer vector")]
    NotPrimitive { side: usize, a: i64, b: i64 },
    #[error("vertex {vertex} has side colors {first} and {second}: not a standard chart")]
    UnsupportedChart { vertex: usize, first: QuoricColor, second: QuoricColor },
    #[error("index {index} out of range for an {m}-gon")]
    IndexRange { index: usize, m: usize },
    #[error("cannot parse {kind} from {text:?}: {reason}")]
    Parse { kind: &'static str, text: String, reason: String },
}

/// A combinatorial `m`-gon with cyclically indexed sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Polygon {
    m: usize,
}

impl Polygon {
    pub fn new(m: usize) -> Result<Self, ModelError> {
        if m < 3 {
            return Err(ModelError::TooFewSides { m });
        }
        Ok(Polygon { m })
    }

    pub fn sides(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> usize {
        self.m
    }

    /// The two sides meeting at vertex `v`: `(v, v+1 mod m)`.
    pub fn sides_at_vertex(&self, v: usize) -> (usize, usize) {
        (v % self.m, (v + 1) % self.m)
    }

    pub fn next_side(&self, s: usize) -> usize {
        (s + 1) % self.m
    }
}

/// A point of the polygon classified by the open face containing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonPoint {
    Interior,
    Side(usize),
    Vertex(usize),
}

impl PolygonPoint {
    pub fn validate(&self, p: &Polygon) -> Result<(), ModelError> {
        match *self {
            PolygonPoint::Interior => Ok(()),
            PolygonPoint::Side(i) | PolygonPoint::Vertex(i) => {
                if i < p.sides() {
                    Ok(())
                } else {
                    Err(ModelError::IndexRange { index: i, m: p.sides() })
                }
            }
        }
    }
}
