//! The invariant-submanifold census of the projective-plane action,
//! derived from coordinate zero patterns, and its one-dimensional orbit
//! graph.
//!
//! Strata are described by per-coordinate patterns: a coordinate is zero,
//! a pure complex type (`C`: no j-part, `J`: only a j-part), or
//! unrestricted. Each stratum of pure type also admits the globally
//! flipped pattern (`C` and `J` exchanged), its image under a right
//! quaternion unit. Containment of point sets reduces to pointwise pattern
//! order over the representative patterns.

use crate::orbit_maps::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordPattern {
    Zero,
    PureC,
    PureJ,
    Any,
}

impl CoordPattern {
    /// Pointwise set inclusion of coordinate patterns.
    fn subset(self, other: CoordPattern) -> bool {
        use CoordPattern::*;
        matches!(
            (self, other),
            (Zero, _) | (PureC, PureC) | (PureJ, PureJ) | (_, Any)
        )
    }

    fn flip(self) -> CoordPattern {
        match self {
            CoordPattern::PureC => CoordPattern::PureJ,
            CoordPattern::PureJ => CoordPattern::PureC,
            other => other,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratumClass {
    FixedPoint,
    Sphere,
    QuaternionicLine,
    ComplexPlane,
}

#[derive(Clone, Debug)]
pub struct CensusStratum {
    pub name: String,
    pub class: StratumClass,
    patterns: Vec<[CoordPattern; 3]>,
}

impl CensusStratum {
    fn new(name: String, class: StratumClass, base: [CoordPattern; 3]) -> Self {
        let flipped = [base[0].flip(), base[1].flip(), base[2].flip()];
        let mut patterns = vec![base];
        if flipped != base {
            patterns.push(flipped);
        }
        CensusStratum { name, class, patterns }
    }

    /// Point-set inclusion: some representative pattern of `self` fits
    /// inside some representative pattern of `other`.
    pub fn contained_in(&self, other: &CensusStratum) -> bool {
        self.patterns.iter().any(|p| {
            other
                .patterns
                .iter()
                .any(|q| (0..3).all(|i| p[i].subset(q[i])))
        })
    }
}

#[derive(Clone, Debug)]
pub struct SkeletonCensus {
    pub strata: Vec<CensusStratum>,
}

fn sign_char(s: Sign) -> char {
    match s {
        Sign::Plus => '+',
        Sign::Minus => '-',
    }
}

/// Builds the census: 3 quaternionic lines, 4 complex planes, 6 spheres
/// and 3 fixed points, with containment computed from the patterns.
///
/// All patterns are gauge-canonical: the first nonzero coordinate is made
/// real positive by the right action, hence of pure complex type. That
/// convention is what turns point-set containment into pointwise pattern
/// order.
pub fn hp2_skeleton_census() -> SkeletonCensus {
    use CoordPattern::*;
    let mut strata = Vec::new();
    // quaternionic lines M_{ij}: one coordinate vanishes, the gauge
    // coordinate is pure, the remaining one arbitrary
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let mut pat = [Zero, Zero, Zero];
        pat[i] = PureC;
        pat[j] = Any;
        strata.push(CensusStratum::new(
            format!("M{i}{j}"),
            StratumClass::QuaternionicLine,
            pat,
        ));
    }
    // complex planes N_{e0 e1 e2}: all coordinates of pure type, first +
    for s1 in [Sign::Plus, Sign::Minus] {
        for s2 in [Sign::Plus, Sign::Minus] {
            let to_pat = |s: Sign| if s == Sign::Plus { PureC } else { PureJ };
            strata.push(CensusStratum::new(
                format!("N+{}{}", sign_char(s1), sign_char(s2)),
                StratumClass::ComplexPlane,
                [PureC, to_pat(s1), to_pat(s2)],
            ));
        }
    }
    // spheres S_{i+ j s}: two pure coordinates, third zero, first sign +
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        for s in [Sign::Plus, Sign::Minus] {
            let mut pat = [Zero, Zero, Zero];
            pat[i] = PureC;
            pat[j] = if s == Sign::Plus { PureC } else { PureJ };
            strata.push(CensusStratum::new(
                format!("S{i}+{j}{}", sign_char(s)),
                StratumClass::Sphere,
                pat,
            ));
        }
    }
    // fixed points, gauge-fixed to a positive real coordinate
    for i in 0..3 {
        let mut pat = [Zero, Zero, Zero];
        pat[i] = PureC;
        strata.push(CensusStratum::new(format!("v{i}"), StratumClass::FixedPoint, pat));
    }
    SkeletonCensus { strata }
}

impl SkeletonCensus {
    pub fn of_class(&self, class: StratumClass) -> Vec<&CensusStratum> {
        self.strata.iter().filter(|s| s.class == class).collect()
    }

    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (
            self.of_class(StratumClass::QuaternionicLine).len(),
            self.of_class(StratumClass::ComplexPlane).len(),
            self.of_class(StratumClass::Sphere).len(),
            self.of_class(StratumClass::FixedPoint).len(),
        )
    }

    /// Names of the strata of the given class containing `s`.
    pub fn containers(&self, s: &CensusStratum, class: StratumClass) -> Vec<String> {
        self.of_class(class)
            .into_iter()
            .filter(|t| s.contained_in(t))
            .map(|t| t.name.clone())
            .collect()
    }
}

/// An undirected multigraph, the 1-skeleton of the orbit space: vertices
/// are fixed points, edges the invariant 2-spheres.
#[derive(Clone, Debug)]
pub struct MultiGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }
}

/// The orbit-graph of the projective-plane action: a triangle with doubled
/// edges, each vertex 4-valent (one edge per tangent weight).
pub fn hp2_gkm_graph() -> MultiGraph {
    let census = hp2_skeleton_census();
    let mut edges = Vec::new();
    for s in census.of_class(StratumClass::Sphere) {
        // endpoints: the fixed points contained in the sphere
        let ends: Vec<usize> = census
            .of_class(StratumClass::FixedPoint)
            .iter()
            .enumerate()
            .filter(|(_, v)| v.contained_in(s))
            .map(|(i, _)| i)
            .collect();
        assert_eq!(ends.len(), 2, "a sphere joins two fixed points");
        edges.push((ends[0], ends[1]));
    }
    MultiGraph { vertices: 3, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_counts() {
        let census = hp2_skeleton_census();
        assert_eq!(census.counts(), (3, 4, 6, 3));
    }

    #[test]
    fn spheres_lie_in_one_line_and_two_planes() {
        let census = hp2_skeleton_census();
        for s in census.of_class(StratumClass::Sphere) {
            let lines = census.containers(s, StratumClass::QuaternionicLine);
            let planes = census.containers(s, StratumClass::ComplexPlane);
            assert_eq!(lines.len(), 1, "{}: {:?}", s.name, lines);
            assert_eq!(planes.len(), 2, "{}: {:?}", s.name, planes);
        }
    }

    #[test]
    fn named_incidences() {
        let census = hp2_skeleton_census();
        let s = census
            .strata
            .iter()
            .find(|s| s.name == "S0+1+")
            .expect("sphere present");
        assert_eq!(census.containers(s, StratumClass::QuaternionicLine), vec!["M01"]);
        let planes = census.containers(s, StratumClass::ComplexPlane);
        assert_eq!(planes, vec!["N+++", "N++-"]);
    }

    #[test]
    fn fixed_points_lie_in_two_lines_and_four_planes() {
        let census = hp2_skeleton_census();
        for v in census.of_class(StratumClass::FixedPoint) {
            assert_eq!(census.containers(v, StratumClass::QuaternionicLine).len(), 2);
            assert_eq!(census.containers(v, StratumClass::ComplexPlane).len(), 4);
        }
    }

    #[test]
    fn gkm_graph_shape() {
        let g = hp2_gkm_graph();
        assert_eq!(g.vertices, 3);
        assert_eq!(g.edges.len(), 6);
        for v in 0..3 {
            assert_eq!(g.degree(v), 4);
        }
        // doubled triangle: every vertex pair joined by exactly two edges
        for a in 0..3 {
            for b in (a + 1)..3 {
                let count = g
                    .edges
                    .iter()
                    .filter(|&&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
                    .count();
                assert_eq!(count, 2);
            }
        }
    }
}
