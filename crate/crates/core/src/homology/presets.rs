//! Preset cell complexes: minimal spheres, the projective plane, and the
//! two sponge complexes with their antipodal comparison.
//!
//! Conventions for the sponges. Axes are indexed 0..3 and `(i, s)` denotes
//! the octahedron vertex `s * e_i`. Edges are oriented from the lower axis
//! to the higher; triangles follow the axis order, so the boundary of the
//! triangle on `(0,s0), (1,s1), (2,s2)` is `e12 - e02 + e01` with the sign
//! superscripts multiplying pairwise. The quotient identifies `(i, s)`
//! with `(i, -s)`; the quotient of the octahedron's eight triangles is the
//! four-triangle projective plane, and the three equatorial squares fold
//! onto two-sided disks attached along the edge pairs `e_p^+ - e_p^-` (the
//! projective lines), each boundary segment traversed once.

use super::{ChainComplex, HomologyError, IntMat};

/// Minimal circle: one vertex, one loop.
pub fn circle() -> ChainComplex {
    ChainComplex::new(vec![1, 1], vec![IntMat::zeros(1, 1)]).expect("circle")
}

/// Minimal CW sphere of dimension `k >= 1`.
pub fn sphere(k: usize) -> ChainComplex {
    assert!(k >= 1);
    if k == 1 {
        return circle();
    }
    let mut cells = vec![0usize; k + 1];
    cells[0] = 1;
    cells[k] = 1;
    let boundaries = (1..=k).map(|d| IntMat::zeros(cells[d - 1], cells[d])).collect();
    ChainComplex::new(cells, boundaries).expect("sphere")
}

/// Minimal projective plane: one cell per dimension, the 2-cell attached
/// with degree 2.
pub fn rp2() -> ChainComplex {
    ChainComplex::new(
        vec![1, 1, 1],
        vec![IntMat::zeros(1, 1), IntMat::from_rows(&[&[2]])],
    )
    .expect("projective plane")
}

// edge bookkeeping for the 3-vertex quotient complex: pairs in axis order
const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn q_edge(pair: usize, sign: i64) -> usize {
    2 * pair + usize::from(sign < 0)
}

/// The 2-complex of the heavy sponge: the four-triangle projective plane
/// (the antipodal quotient of the octahedron) with three two-sided disks
/// attached along the three projective lines.
///
/// Cells: 3 vertices, 6 edges (two per axis pair), 4 triangles + 3
/// biangles.
pub fn build_hp2_sponge() -> ChainComplex {
    let mut d1 = IntMat::zeros(3, 6);
    for (p, &(i, j)) in PAIRS.iter().enumerate() {
        for sign in [1i64, -1] {
            let e = q_edge(p, sign);
            d1.set(i, e, -1);
            d1.set(j, e, 1);
        }
    }
    let mut d2 = IntMat::zeros(6, 7);
    // triangles indexed by the sign pair (s1, s2) of axes 1 and 2 (axis 0
    // is normalized to +): boundary e12^{s1 s2} - e02^{s2} + e01^{s1}
    let sign_pairs = [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)];
    for (t, &(s1, s2)) in sign_pairs.iter().enumerate() {
        d2.set(q_edge(2, s1 * s2), t, 1);
        d2.set(q_edge(1, s2), t, -1);
        d2.set(q_edge(0, s1), t, 1);
    }
    // biangles: one per axis pair, attached along the projective line
    for p in 0..3 {
        d2.set(q_edge(p, 1), 4 + p, 1);
        d2.set(q_edge(p, -1), 4 + p, -1);
    }
    ChainComplex::new(vec![3, 6, 7], vec![d1, d2]).expect("sponge complex")
}

// octahedron bookkeeping: vertex (axis, sign), edge (pair, sign of i, sign
// of j), triangle (s0, s1, s2), square (pair)

fn oct_vertex(axis: usize, sign: i64) -> usize {
    axis + if sign < 0 { 3 } else { 0 }
}

fn oct_edge(pair: usize, si: i64, sj: i64) -> usize {
    4 * pair + 2 * usize::from(si < 0) + usize::from(sj < 0)
}

fn oct_triangle(s: [i64; 3]) -> usize {
    4 * usize::from(s[0] < 0) + 2 * usize::from(s[1] < 0) + usize::from(s[2] < 0)
}

/// The octahedral sponge: the boundary of the octahedron with three
/// squares attached along its equatorial circles.
///
/// Cells: 6 vertices, 12 edges, 8 triangles + 3 squares.
pub fn build_g42_sponge() -> ChainComplex {
    let mut d1 = IntMat::zeros(6, 12);
    for (p, &(i, j)) in PAIRS.iter().enumerate() {
        for si in [1i64, -1] {
            for sj in [1i64, -1] {
                let e = oct_edge(p, si, sj);
                d1.set(oct_vertex(i, si), e, -1);
                d1.set(oct_vertex(j, sj), e, 1);
            }
        }
    }
    let mut d2 = IntMat::zeros(12, 11);
    for s0 in [1i64, -1] {
        for s1 in [1i64, -1] {
            for s2 in [1i64, -1] {
                let t = oct_triangle([s0, s1, s2]);
                d2.set(oct_edge(2, s1, s2), t, 1);
                d2.set(oct_edge(1, s0, s2), t, -1);
                d2.set(oct_edge(0, s0, s1), t, 1);
            }
        }
    }
    // equatorial squares: cycle (i,+) -> (j,+) -> (i,-) -> (j,-) -> (i,+)
    for p in 0..3 {
        let sq = 8 + p;
        d2.set(oct_edge(p, 1, 1), sq, 1);
        d2.set(oct_edge(p, -1, 1), sq, -1);
        d2.set(oct_edge(p, -1, -1), sq, 1);
        d2.set(oct_edge(p, 1, -1), sq, -1);
    }
    ChainComplex::new(vec![6, 12, 11], vec![d1, d2]).expect("octahedral sponge")
}

/// The antipodal quotient of the octahedral sponge as a chain complex:
/// cells pair off two-to-one except the squares, which the involution
/// rotates onto themselves and which fold to two-sided disks over half
/// their boundary.
pub fn antipodal_quotient_of_g42() -> ChainComplex {
    // representatives: vertices with sign +, edges with si = +, triangles
    // with s0 = +; push any cell to its representative with sign +1
    let mut d1 = IntMat::zeros(3, 6);
    for (p, &(i, j)) in PAIRS.iter().enumerate() {
        for sj in [1i64, -1] {
            let e = q_edge(p, sj);
            d1.set(i, e, -1);
            d1.set(j, e, 1);
        }
    }
    let push_edge = |pair: usize, si: i64, sj: i64| -> usize {
        if si > 0 {
            q_edge(pair, sj)
        } else {
            q_edge(pair, -sj)
        }
    };
    let mut d2 = IntMat::zeros(6, 7);
    let mut t_col = 0;
    for s1 in [1i64, -1] {
        for s2 in [1i64, -1] {
            // representative triangle (+, s1, s2); push each edge
            d2.set(push_edge(2, s1, s2), t_col, 1);
            d2.set(push_edge(1, 1, s2), t_col, -1);
            d2.set(push_edge(0, 1, s1), t_col, 1);
            t_col += 1;
        }
    }
    for p in 0..3 {
        // square boundary pushes to 2 (e^+ - e^-); the folded disk runs
        // along half of it
        let col = 4 + p;
        let mut acc = [0i64; 6];
        acc[push_edge(p, 1, 1)] += 1;
        acc[push_edge(p, -1, 1)] -= 1;
        acc[push_edge(p, -1, -1)] += 1;
        acc[push_edge(p, 1, -1)] -= 1;
        for (e, &v) in acc.iter().enumerate() {
            assert!(v % 2 == 0, "square boundary must push to an even chain");
            d2.set(e, col, v / 2);
        }
    }
    ChainComplex::new(vec![3, 6, 7], vec![d1, d2]).expect("quotient complex")
}

/// Signed bijections between the cells of two complexes, one per
/// dimension, under which the boundary matrices agree exactly.
pub type SignedIso = Vec<Vec<(usize, i64)>>;

/// Backtracking search for a signed cell bijection intertwining the
/// boundaries. Vertices map positively; higher cells may reverse
/// orientation. Complexes here have at most a few dozen cells.
pub fn find_signed_isomorphism(a: &ChainComplex, b: &ChainComplex) -> Option<SignedIso> {
    if a.cell_counts() != b.cell_counts() {
        return None;
    }
    let dims = a.top_dim();
    // map[d][cell] = (image, sign)
    let mut iso: SignedIso = a.cell_counts().iter().map(|&n| vec![(usize::MAX, 0); n]).collect();

    fn boundary_chain(c: &ChainComplex, d: usize, cell: usize) -> Vec<i64> {
        let b = c.boundary(d).expect("d >= 1");
        (0..b.rows()).map(|r| b.get(r, cell)).collect()
    }

    fn mapped_chain(chain: &[i64], map: &[(usize, i64)]) -> Vec<i64> {
        let mut out = vec![0i64; chain.len()];
        for (cell, &v) in chain.iter().enumerate() {
            if v != 0 {
                let (img, sign) = map[cell];
                out[img] += sign * v;
            }
        }
        out
    }

    fn assign(
        a: &ChainComplex,
        b: &ChainComplex,
        dims: usize,
        d: usize,
        cell: usize,
        used: &mut Vec<bool>,
        iso: &mut SignedIso,
    ) -> bool {
        let n = a.cells(d);
        if cell == n {
            let next = d + 1;
            if next > dims {
                return true;
            }
            let mut used_next = vec![false; b.cells(next)];
            return assign(a, b, dims, next, 0, &mut used_next, iso);
        }
        if d == 0 {
            for img in 0..n {
                if used[img] {
                    continue;
                }
                used[img] = true;
                iso[0][cell] = (img, 1);
                if assign(a, b, dims, d, cell + 1, used, iso) {
                    return true;
                }
                used[img] = false;
            }
            return false;
        }
        let target = mapped_chain(&boundary_chain(a, d, cell), &iso[d - 1]);
        for img in 0..b.cells(d) {
            if used[img] {
                continue;
            }
            let img_chain = boundary_chain(b, d, img);
            for sign in [1i64, -1] {
                if target.iter().zip(img_chain.iter()).all(|(&x, &y)| x == sign * y) {
                    used[img] = true;
                    iso[d][cell] = (img, sign);
                    if assign(a, b, dims, d, cell + 1, used, iso) {
                        return true;
                    }
                    used[img] = false;
                }
            }
        }
        false
    }

    let mut used0 = vec![false; b.cells(0)];
    if assign(a, b, dims, 0, 0, &mut used0, &mut iso) {
        Some(iso)
    } else {
        None
    }
}

/// Builds the antipodal quotient of the octahedral sponge and checks it is
/// isomorphic, as an incidence structure, to the hand-built sponge of the
/// projective-plane construction.
pub fn antipodal_quotient_check() -> Result<bool, HomologyError> {
    let quotient = antipodal_quotient_of_g42();
    let sponge = build_hp2_sponge();
    Ok(find_signed_isomorphism(&quotient, &sponge).is_some())
}

#[cfg(test)]
mod tests {
    use super::super::{homology, HomologyGroup};
    use super::*;

    #[test]
    fn minimal_presets() {
        let h = homology(&circle()).unwrap();
        assert_eq!(h.group(0), HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h.group(1), HomologyGroup { betti: 1, torsion: vec![] });

        for k in 2..=3 {
            let h = homology(&sphere(k)).unwrap();
            assert_eq!(h.group(0).betti, 1);
            for d in 1..k {
                assert!(h.group(d).is_trivial(), "S^{k} has trivial H_{d}");
            }
            assert_eq!(h.group(k), HomologyGroup { betti: 1, torsion: vec![] });
        }
    }

    #[test]
    fn projective_plane_homology() {
        let h = homology(&rp2()).unwrap();
        assert_eq!(h.group(0), HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h.group(1), HomologyGroup { betti: 0, torsion: vec![2] });
        assert!(h.group(2).is_trivial());
    }

    #[test]
    fn sponge_cell_counts() {
        let s = build_hp2_sponge();
        assert_eq!(s.cell_counts(), &[3, 6, 7]);
        let g = build_g42_sponge();
        assert_eq!(g.cell_counts(), &[6, 12, 11]);
        // boundary-squared vanishing is enforced by the constructor; both
        // presets build, so the encodings close up
    }

    #[test]
    fn quotient_triangles_alone_are_the_projective_plane() {
        // drop the biangles: the four triangles triangulate RP^2
        let s = build_hp2_sponge();
        let d2 = s.boundary(2).unwrap();
        let triangles = IntMat::from_fn(6, 4, |r, c| d2.get(r, c));
        let c = ChainComplex::new(vec![3, 6, 4], vec![s.boundary(1).unwrap().clone(), triangles])
            .unwrap();
        let h = homology(&c).unwrap();
        assert_eq!(h.group(0), HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h.group(1), HomologyGroup { betti: 0, torsion: vec![2] });
        assert!(h.group(2).is_trivial());
    }

    #[test]
    fn octahedron_alone_is_a_two_sphere() {
        let g = build_g42_sponge();
        let d2 = g.boundary(2).unwrap();
        let triangles = IntMat::from_fn(12, 8, |r, c| d2.get(r, c));
        let c =
            ChainComplex::new(vec![6, 12, 8], vec![g.boundary(1).unwrap().clone(), triangles])
                .unwrap();
        let h = homology(&c).unwrap();
        assert_eq!(h.group(0).betti, 1);
        assert!(h.group(1).is_trivial());
        assert_eq!(h.group(2), HomologyGroup { betti: 1, torsion: vec![] });
    }

    #[test]
    fn sponge_reference_homology() {
        // computed once from the encodings and frozen as reference values;
        // Euler characteristics cross-check: 3-6+7 = 4 = 1+3 and
        // 6-12+11 = 5 = 1+4
        let h = homology(&build_hp2_sponge()).unwrap();
        assert_eq!(h.group(0), HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h.group(1), HomologyGroup { betti: 0, torsion: vec![] });
        assert_eq!(h.group(2), HomologyGroup { betti: 3, torsion: vec![] });

        let h = homology(&build_g42_sponge()).unwrap();
        assert_eq!(h.group(0), HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h.group(1), HomologyGroup { betti: 0, torsion: vec![] });
        assert_eq!(h.group(2), HomologyGroup { betti: 4, torsion: vec![] });
    }

    #[test]
    fn one_disk_already_kills_the_line_class() {
        // triangles plus a single biangle: no free part (and in fact no
        // torsion) remains in degree 1
        let s = build_hp2_sponge();
        let d2 = s.boundary(2).unwrap();
        for biangle in 4..7 {
            let cols: Vec<usize> = (0..4).chain([biangle]).collect();
            let m = IntMat::from_fn(6, 5, |r, c| d2.get(r, cols[c]));
            let c = ChainComplex::new(vec![3, 6, 5], vec![s.boundary(1).unwrap().clone(), m])
                .unwrap();
            let h = homology(&c).unwrap();
            assert_eq!(h.group(1).betti, 0);
            assert!(h.group(1).torsion.is_empty());
        }
    }

    #[test]
    fn antipodal_quotient_matches_sponge() {
        assert!(antipodal_quotient_check().unwrap());
        // and the two complexes agree cell count by cell count
        assert_eq!(
            antipodal_quotient_of_g42().cell_counts(),
            build_hp2_sponge().cell_counts()
        );
    }

    #[test]
    fn isomorphism_search_rejects_distinct_complexes() {
        assert!(find_signed_isomorphism(&rp2(), &sphere(2)).is_none());
        let s = build_hp2_sponge();
        let g = build_g42_sponge();
        assert!(find_signed_isomorphism(&s, &g).is_none());
    }
}
