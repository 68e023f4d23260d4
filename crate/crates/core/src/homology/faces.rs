//! Face posets of manifolds with corners, each face carrying its own cell
//! complex, and the acyclicity check over all of them.
//!
//! A manifold with corners is a homology polytope when every face is
//! integrally acyclic. The presets encode a cube (every face a disk), the
//! corner 3-disk whose boundary is three lunes glued along three arcs
//! ("the rugby ball"), and the connected sum of two of those along
//! interior facet points, whose merged facet is an annulus and breaks the
//! property.

use super::{homology, ChainComplex, HomologyError, HomologyResult, IntMat};

#[derive(Clone, Debug)]
pub struct Face {
    pub name: String,
    pub dim: usize,
    pub complex: ChainComplex,
    /// Direct subfaces, as indices into the owning complex.
    pub subfaces: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FaceComplex {
    faces: Vec<Face>,
}

impl FaceComplex {
    /// Validates that every face reaches a vertex through its subfaces.
    pub fn new(faces: Vec<Face>) -> Result<Self, HomologyError> {
        let fc = FaceComplex { faces };
        for (i, face) in fc.faces.iter().enumerate() {
            if !fc.reaches_vertex(i) {
                return Err(HomologyError::FaceWithoutVertex { face: face.name.clone() });
            }
        }
        Ok(fc)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    fn reaches_vertex(&self, idx: usize) -> bool {
        if self.faces[idx].dim == 0 {
            return true;
        }
        let mut stack = vec![idx];
        let mut seen = vec![false; self.faces.len()];
        while let Some(i) = stack.pop() {
            if seen[i] {
                continue;
            }
            seen[i] = true;
            if self.faces[i].dim == 0 {
                return true;
            }
            stack.extend(self.faces[i].subfaces.iter().copied());
        }
        false
    }
}

#[derive(Clone, Debug)]
pub struct FaceFailure {
    pub face: String,
    pub homology: HomologyResult,
}

#[derive(Clone, Debug)]
pub struct PolytopeCheck {
    pub is_homology_polytope: bool,
    pub failures: Vec<FaceFailure>,
}

/// Tests every face for reduced integral acyclicity and reports the
/// failing ones.
pub fn homology_polytope_check(fc: &FaceComplex) -> Result<PolytopeCheck, HomologyError> {
    let mut failures = Vec::new();
    for face in fc.faces() {
        let h = homology(&face.complex)?;
        if !h.is_reduced_trivial() {
            failures.push(FaceFailure { face: face.name.clone(), homology: h });
        }
    }
    Ok(PolytopeCheck { is_homology_polytope: failures.is_empty(), failures })
}

fn point_complex() -> ChainComplex {
    ChainComplex::point()
}

fn segment_complex() -> ChainComplex {
    ChainComplex::new(vec![2, 1], vec![IntMat::from_rows(&[&[-1], &[1]])]).expect("segment")
}

/// Two vertices, two parallel edges, one 2-cell: a disk with two boundary
/// arcs (a lune).
fn lune_complex() -> ChainComplex {
    ChainComplex::new(
        vec![2, 2, 1],
        vec![
            IntMat::from_rows(&[&[-1, -1], &[1, 1]]),
            IntMat::from_rows(&[&[1], &[-1]]),
        ],
    )
    .expect("lune")
}

/// The corner 3-disk bounded by three lunes: 2 vertices (the poles), 3
/// arcs, 3 lunes, one 3-cell.
fn corner_ball_complex() -> ChainComplex {
    let d1 = IntMat::from_rows(&[&[-1, -1, -1], &[1, 1, 1]]);
    // lune between arcs (a, b) has boundary b - a; cyclic pairs
    let d2 = IntMat::from_rows(&[
        // columns: L01, L12, L20
        &[-1, 0, 1],
        &[1, -1, 0],
        &[0, 1, -1],
    ]);
    let d3 = IntMat::from_rows(&[&[1], &[1], &[1]]);
    ChainComplex::new(vec![2, 3, 3, 1], vec![d1, d2, d3]).expect("corner ball")
}

/// The face poset of the corner 3-disk: 2 corner vertices, 3 arcs, 3 lune
/// facets, and the body. Every face is a disk of its dimension.
pub fn rugby_ball_faces() -> FaceComplex {
    let mut faces = Vec::new();
    for v in 0..2 {
        faces.push(Face {
            name: format!("pole{v}"),
            dim: 0,
            complex: point_complex(),
            subfaces: vec![],
        });
    }
    for a in 0..3 {
        faces.push(Face {
            name: format!("arc{a}"),
            dim: 1,
            complex: segment_complex(),
            subfaces: vec![0, 1],
        });
    }
    // facet k is the lune spanned by the two arcs other than k
    for k in 0..3 {
        let arcs: Vec<usize> = (0..3).filter(|&a| a != k).map(|a| 2 + a).collect();
        faces.push(Face {
            name: format!("facet{k}"),
            dim: 2,
            complex: lune_complex(),
            subfaces: arcs,
        });
    }
    faces.push(Face {
        name: "body".to_string(),
        dim: 3,
        complex: corner_ball_complex(),
        subfaces: vec![5, 6, 7],
    });
    FaceComplex::new(faces).expect("rugby ball faces")
}

/// An annulus with an honest boundary structure: the two boundary circles
/// are each a pair of arcs between two poles, joined by one seam edge; one
/// 2-cell runs around the seam.
fn annulus_complex() -> ChainComplex {
    // vertices: p1-, p1+, p2-, p2+ (0..4)
    // edges: a2 (p1- -> p1+), a3 (p1- -> p1+), b2 (p2- -> p2+),
    //        b3 (p2- -> p2+), seam s (p1+ -> p2+)
    let d1 = IntMat::from_rows(&[
        &[-1, -1, 0, 0, 0],
        &[1, 1, 0, 0, -1],
        &[0, 0, -1, -1, 0],
        &[0, 0, 1, 1, 1],
    ]);
    // 2-cell: around c1 = a2 - a3, across s, back around c2^{-1}, return
    let d2 = IntMat::from_rows(&[&[1], &[-1], &[-1], &[1], &[0]]);
    ChainComplex::new(vec![4, 5, 1], vec![d1, d2]).expect("annulus")
}

/// A minimal 3-ball: one vertex, one 2-cell, one 3-cell.
fn minimal_ball_complex() -> ChainComplex {
    ChainComplex::new(
        vec![1, 0, 1, 1],
        vec![
            IntMat::zeros(1, 0),
            IntMat::zeros(0, 1),
            IntMat::from_rows(&[&[1]]),
        ],
    )
    .expect("minimal ball")
}

/// The face poset of a connected sum of two corner 3-disks along interior
/// points of one facet each: the two punctured facets merge into a single
/// annulus facet, the remaining four facets stay lunes. Not a homology
/// polytope: the annulus carries a degree-one cycle.
pub fn fig2_connected_sum_faces() -> FaceComplex {
    let mut faces = Vec::new();
    // vertices 0..4: poles of the two summands
    for v in 0..4 {
        faces.push(Face {
            name: format!("pole{v}"),
            dim: 0,
            complex: point_complex(),
            subfaces: vec![],
        });
    }
    // arcs 4..10: a0,a1,a2 on the first summand, b0,b1,b2 on the second
    for a in 0..3 {
        faces.push(Face {
            name: format!("a{a}"),
            dim: 1,
            complex: segment_complex(),
            subfaces: vec![0, 1],
        });
    }
    for b in 0..3 {
        faces.push(Face {
            name: format!("b{b}"),
            dim: 1,
            complex: segment_complex(),
            subfaces: vec![2, 3],
        });
    }
    // facets: the annulus glued from the two punctured facets (numbered 0
    // on each side), then the four untouched lunes
    faces.push(Face {
        name: "tube".to_string(),
        dim: 2,
        complex: annulus_complex(),
        // boundary arcs: the two arcs of each old facet 0
        subfaces: vec![4 + 1, 4 + 2, 7 + 1, 7 + 2],
    });
    for k in 1..3 {
        let arcs: Vec<usize> = (0..3).filter(|&a| a != k).map(|a| 4 + a).collect();
        faces.push(Face {
            name: format!("facetA{k}"),
            dim: 2,
            complex: lune_complex(),
            subfaces: arcs,
        });
    }
    for k in 1..3 {
        let arcs: Vec<usize> = (0..3).filter(|&b| b != k).map(|b| 7 + b).collect();
        faces.push(Face {
            name: format!("facetB{k}"),
            dim: 2,
            complex: lune_complex(),
            subfaces: arcs,
        });
    }
    faces.push(Face {
        name: "body".to_string(),
        dim: 3,
        complex: minimal_ball_complex(),
        subfaces: vec![10, 11, 12, 13, 14],
    });
    FaceComplex::new(faces).expect("connected sum faces")
}

/// The face poset of the 3-cube: 8 vertices, 12 edges, 6 squares, the
/// body. All faces are disks.
pub fn cube3_faces() -> FaceComplex {
    let mut faces = Vec::new();
    // vertices: bit patterns
    for v in 0..8usize {
        faces.push(Face {
            name: format!("v{v:03b}"),
            dim: 0,
            complex: point_complex(),
            subfaces: vec![],
        });
    }
    // edges: (vertex, axis) with the axis bit clear
    let mut edge_index = std::collections::HashMap::new();
    for v in 0..8usize {
        for axis in 0..3 {
            if v & (1 << axis) == 0 {
                let idx = faces.len();
                edge_index.insert((v, axis), idx);
                faces.push(Face {
                    name: format!("e{v:03b}+{axis}"),
                    dim: 1,
                    complex: segment_complex(),
                    subfaces: vec![v, v | (1 << axis)],
                });
            }
        }
    }
    // squares: pairs of axes and the fixed bit of the remaining axis
    let square_complex = || -> ChainComplex {
        let d1 = IntMat::from_rows(&[
            &[-1, 0, 0, -1],
            &[1, -1, 0, 0],
            &[0, 1, -1, 0],
            &[0, 0, 1, 1],
        ]);
        let d2 = IntMat::from_rows(&[&[1], &[1], &[1], &[-1]]);
        ChainComplex::new(vec![4, 4, 1], vec![d1, d2]).expect("square")
    };
    let mut square_faces = Vec::new();
    for fixed_axis in 0..3usize {
        for fixed_bit in 0..2usize {
            let (u, w) = match fixed_axis {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let base = fixed_bit << fixed_axis;
            let corners = [
                base,
                base | (1 << u),
                base | (1 << u) | (1 << w),
                base | (1 << w),
            ];
            let mut subs = corners.to_vec();
            for (i, &c) in corners.iter().enumerate() {
                let n = corners[(i + 1) % 4];
                let (lo, axis) = if n > c {
                    (c, (n ^ c).trailing_zeros() as usize)
                } else {
                    (n, (n ^ c).trailing_zeros() as usize)
                };
                subs.push(edge_index[&(lo, axis)]);
            }
            let idx = faces.len();
            square_faces.push(idx);
            faces.push(Face {
                name: format!("f{fixed_axis}{fixed_bit}"),
                dim: 2,
                complex: square_complex(),
                subfaces: subs,
            });
        }
    }
    faces.push(Face {
        name: "body".to_string(),
        dim: 3,
        complex: cube_body_complex(),
        subfaces: square_faces,
    });
    FaceComplex::new(faces).expect("cube faces")
}

/// The solid cube with its full cell structure; the 3-cell coefficient
/// vector is the integer kernel generator of the square boundary, read off
/// the Smith normal form.
fn cube_body_complex() -> ChainComplex {
    let mut edge_ids = std::collections::HashMap::new();
    let mut edges = Vec::new();
    for v in 0..8usize {
        for axis in 0..3usize {
            if v & (1 << axis) == 0 {
                edge_ids.insert((v, axis), edges.len());
                edges.push((v, v | (1 << axis)));
            }
        }
    }
    let mut d1 = IntMat::zeros(8, edges.len());
    for (e, &(a, b)) in edges.iter().enumerate() {
        d1.set(a, e, -1);
        d1.set(b, e, 1);
    }
    let mut d2 = IntMat::zeros(edges.len(), 6);
    let mut col = 0;
    for fixed_axis in 0..3usize {
        for fixed_bit in 0..2usize {
            let (u, w) = match fixed_axis {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let base = fixed_bit << fixed_axis;
            let corners = [
                base,
                base | (1 << u),
                base | (1 << u) | (1 << w),
                base | (1 << w),
            ];
            for (i, &c) in corners.iter().enumerate() {
                let n = corners[(i + 1) % 4];
                let axis = (n ^ c).trailing_zeros() as usize;
                let (lo, sign) = if n > c { (c, 1) } else { (n, -1) };
                let e = edge_ids[&(lo, axis)];
                d2.set(e, col, d2.get(e, col) + sign);
            }
            col += 1;
        }
    }
    // the 3-cell boundary spans the kernel of d2
    let snf = super::smith_normal_form(&d2).expect("small matrix");
    let rank = snf.rank();
    assert_eq!(rank, 5, "the cube surface has one 2-cycle");
    let mut d3 = IntMat::zeros(6, 1);
    for r in 0..6 {
        d3.set(r, 0, snf.v.get(r, rank));
    }
    ChainComplex::new(vec![8, 12, 6, 1], vec![d1, d2, d3]).expect("cube body")
}
