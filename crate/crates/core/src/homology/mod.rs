//! Integral homology of finite cell complexes from their boundary
//! matrices, plus the preset complexes used by the verification suites.

mod census;
mod faces;
mod presets;
mod snf;

pub use census::{hp2_gkm_graph, hp2_skeleton_census, MultiGraph, SkeletonCensus, StratumClass};
pub use faces::{
    cube3_faces, fig2_connected_sum_faces, homology_polytope_check, rugby_ball_faces, Face,
    FaceComplex, FaceFailure, PolytopeCheck,
};
pub use presets::{
    antipodal_quotient_check, antipodal_quotient_of_g42, build_g42_sponge, build_hp2_sponge,
    circle, find_signed_isomorphism, rp2, sphere, SignedIso,
};
pub use snf::{invariant_factors_of, smith_normal_form, Snf};

use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum HomologyError {
    #[error("boundary {dim} has shape {rows}x{cols}, expected {expect_rows}x{expect_cols}")]
    BoundaryShape { dim: usize, rows: usize, cols: usize, expect_rows: usize, expect_cols: usize },
    #[error("complex is invalid: boundary_{low} * boundary_{high} != 0")]
    NotAComplex { low: usize, high: usize },
    #[error("an entry exceeded the 64-bit range")]
    EntryOverflow,
    #[error("cannot parse chain complex: {0}")]
    Parse(String),
    #[error("face {face} is missing a vertex in its closure")]
    FaceWithoutVertex { face: String },
}

/// A dense integer matrix, row major. Small and exact; all homology
/// bookkeeping runs through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| i64::from(r == c))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMat { rows, cols, data }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.concat() }
    }

    pub fn from_rows_vec(rows: usize, cols: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Product with 128-bit accumulation; panics if an entry of the result
    /// leaves the 64-bit range.
    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        IntMat::from_fn(self.rows, other.cols, |r, c| {
            let acc: i128 = (0..self.cols)
                .map(|k| self.get(r, k) as i128 * other.get(k, c) as i128)
                .sum();
            i64::try_from(acc).expect("matrix product entry out of range")
        })
    }

    /// Determinant by fraction-free elimination; intended for the small
    /// transform matrices of the normal form.
    pub fn det_small(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m: Vec<i128> = self.data.iter().map(|&v| v as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k * n + k] == 0 {
                let Some(p) = ((k + 1)..n).find(|&r| m[r * n + k] != 0) else {
                    return 0;
                };
                for c in 0..n {
                    m.swap(k * n + c, p * n + c);
                }
                sign = -sign;
            }
            for r in (k + 1)..n {
                for c in (k + 1)..n {
                    m[r * n + c] = (m[r * n + c] * m[k * n + k] - m[r * n + k] * m[k * n + c])
                        / prev;
                }
                m[r * n + k] = 0;
            }
            prev = m[k * n + k];
        }
        i64::try_from(sign * m[n * n - 1]).expect("determinant out of range")
    }
}

/// Boundary matrices of a finite cell complex: `boundary(d)` maps
/// `d`-chains to `(d-1)`-chains, one column per `d`-cell. The composite of
/// consecutive boundaries must vanish exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    cells: Vec<usize>,
    boundaries: Vec<IntMat>,
}

impl ChainComplex {
    /// `cells[d]` counts the `d`-cells; `boundaries[d-1]` is the matrix of
    /// the boundary out of dimension `d` (so `boundaries.len() + 1 ==
    /// cells.len()` unless the complex is 0-dimensional).
    pub fn new(cells: Vec<usize>, boundaries: Vec<IntMat>) -> Result<Self, HomologyError> {
        assert!(!cells.is_empty(), "complex needs at least dimension 0");
        assert_eq!(
            boundaries.len() + 1,
            cells.len(),
            "one boundary matrix per positive dimension"
        );
        for (d, b) in boundaries.iter().enumerate() {
            let (er, ec) = (cells[d], cells[d + 1]);
            if b.rows() != er || b.cols() != ec {
                return Err(HomologyError::BoundaryShape {
                    dim: d + 1,
                    rows: b.rows(),
                    cols: b.cols(),
                    expect_rows: er,
                    expect_cols: ec,
                });
            }
        }
        for d in 1..boundaries.len() {
            if !boundaries[d - 1].mul(&boundaries[d]).is_zero() {
                return Err(HomologyError::NotAComplex { low: d, high: d + 1 });
            }
        }
        Ok(ChainComplex { cells, boundaries })
    }

    pub fn point() -> Self {
        ChainComplex::new(vec![1], vec![]).expect("point complex")
    }

    pub fn top_dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, d: usize) -> usize {
        self.cells.get(d).copied().unwrap_or(0)
    }

    pub fn cell_counts(&self) -> &[usize] {
        &self.cells
    }

    /// The boundary out of dimension `d >= 1`, if the complex reaches it.
    pub fn boundary(&self, d: usize) -> Option<&IntMat> {
        if d == 0 {
            None
        } else {
            self.boundaries.get(d - 1)
        }
    }

    /// Text format: top dimension, cell counts, then each boundary matrix
    /// as rows of integers (rows indexed by the lower-dimensional cells).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("dim {}\n", self.top_dim()));
        let counts: Vec<String> = self.cells.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("cells {}\n", counts.join(" ")));
        for (d, b) in self.boundaries.iter().enumerate() {
            out.push_str(&format!("boundary {}\n", d + 1));
            // degenerate shapes have no entries and write no rows
            if b.cols() == 0 {
                continue;
            }
            for r in 0..b.rows() {
                let row: Vec<String> = (0..b.cols()).map(|c| b.get(r, c).to_string()).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, HomologyError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let err = |msg: &str| HomologyError::Parse(msg.to_string());
        let dim_line = lines.next().ok_or_else(|| err("missing 'dim' line"))?;
        let dim: usize = dim_line
            .strip_prefix("dim")
            .ok_or_else(|| err("expected 'dim N'"))?
            .trim()
            .parse()
            .map_err(|_| err("bad dimension"))?;
        let cells_line = lines.next().ok_or_else(|| err("missing 'cells' line"))?;
        let cells: Vec<usize> = cells_line
            .strip_prefix("cells")
            .ok_or_else(|| err("expected 'cells n0 n1 ...'"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err("bad cell count")))
            .collect::<Result<_, _>>()?;
        if cells.len() != dim + 1 {
            return Err(err("cell counts do not match the dimension"));
        }
        let mut boundaries = Vec::new();
        for d in 1..=dim {
            let header = lines.next().ok_or_else(|| err("missing boundary header"))?;
            let got: usize = header
                .strip_prefix("boundary")
                .ok_or_else(|| err("expected 'boundary d'"))?
                .trim()
                .parse()
                .map_err(|_| err("bad boundary index"))?;
            if got != d {
                return Err(err("boundary matrices out of order"));
            }
            let mut b = IntMat::zeros(cells[d - 1], cells[d]);
            if cells[d] == 0 {
                boundaries.push(b);
                continue;
            }
            for r in 0..cells[d - 1] {
                let row = lines.next().ok_or_else(|| err("missing matrix row"))?;
                let entries: Vec<i64> = row
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| err("bad integer")))
                    .collect::<Result<_, _>>()?;
                if entries.len() != cells[d] {
                    return Err(err("row length does not match the cell count"));
                }
                for (c, v) in entries.into_iter().enumerate() {
                    b.set(r, c, v);
                }
            }
            boundaries.push(b);
        }
        ChainComplex::new(cells, boundaries)
    }
}

/// One homology group: free rank plus torsion coefficients in divisibility
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<i64>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Integral homology per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn group(&self, d: usize) -> HomologyGroup {
        self.groups
            .get(d)
            .cloned()
            .unwrap_or(HomologyGroup { betti: 0, torsion: vec![] })
    }

    pub fn betti(&self, d: usize) -> usize {
        self.group(d).betti
    }

    /// True when the reduced homology vanishes in every degree: one
    /// connected component and nothing above.
    pub fn is_reduced_trivial(&self) -> bool {
        self.group(0) == HomologyGroup { betti: 1, torsion: vec![] }
            && self.groups.iter().skip(1).all(|g| g.is_trivial())
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, g) in self.groups.iter().enumerate() {
            writeln!(f, "H_{d} = {g}")?;
        }
        Ok(())
    }
}

/// Homology of a validated chain complex via Smith normal forms: in each
/// degree the free rank is `cells - rank(boundary_d) - rank(boundary_{d+1})`
/// and the torsion comes from the invariant factors above 1 of the
/// incoming boundary.
pub fn homology(c: &ChainComplex) -> Result<HomologyResult, HomologyError> {
    let top = c.top_dim();
    let mut factors: Vec<Vec<i64>> = Vec::with_capacity(top + 2);
    factors.push(Vec::new()); // no boundary out of dimension 0
    for d in 1..=top {
        factors.push(invariant_factors_of(c.boundary(d).expect("validated"))?);
    }
    factors.push(Vec::new()); // nothing above the top dimension
    let rank = |d: usize| -> usize { factors.get(d).map_or(0, |f| f.len()) };
    let mut groups = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let betti = c.cells(d) - rank(d) - rank(d + 1);
        let torsion = factors
            .get(d + 1)
            .map(|f| {
                f.iter()
                    .filter(|&&v| v.abs() > 1)
                    .map(|&v| v.abs())
                    .collect()
            })
            .unwrap_or_default();
        groups.push(HomologyGroup { betti, torsion });
    }
    Ok(HomologyResult { groups })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_square_enforced() {
        // a fake complex with d^2 != 0 is rejected
        let bad = ChainComplex::new(
            vec![1, 1, 1],
            vec![IntMat::from_rows(&[&[1]]), IntMat::from_rows(&[&[1]])],
        );
        assert!(matches!(bad, Err(HomologyError::NotAComplex { .. })));
    }

    #[test]
    fn text_round_trip() {
        let c = rp2();
        let text = c.to_text();
        let back = ChainComplex::from_text(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(ChainComplex::from_text("nonsense").is_err());
        assert!(ChainComplex::from_text("dim 1\ncells 1\n").is_err());
    }
}
