//! Normalized matrix spaces and their projections onto the cone of
//! positive-semidefinite symmetric matrices.
//!
//! A ray in the space of real `l x k` matrices is represented by its unit
//! Frobenius-norm member ([`NormalizedMatrix`]). Two projections are
//! implemented:
//!
//! * the Gram projection `A -> A^T A`, a complete invariant of the columns
//!   of `A` up to a common orthogonal transformation of the rows;
//! * the polar projection `A -> sqrt(A^T A)`, the positive factor of the
//!   polar decomposition `A = Q P`, a complete invariant up to a common
//!   rotation of the rows once the sign of `det A` is retained.
//!
//! PSD images are normalized to trace 1, which places them on the compact
//! affine slice of the cone ([`SpectrahedronPoint`]). The signed-height
//! model [`DoubledSpherePoint`] glues two copies of that slice along the
//! degenerate boundary: the height is `sign(det A) * lambda_min` and
//! vanishes exactly where the matrix is singular.

mod eig;

pub use eig::{sym_eigenvalues, symmetry_residual, SYMMETRY_TOL};

use nalgebra::DMatrix;
use thiserror::Error;

/// Frobenius-norm tolerance for normalized representatives.
pub const NORM_TOL: f64 = 1e-12;
/// Most-negative eigenvalue accepted as numerically PSD.
pub const PSD_TOL: f64 = 1e-10;
/// Trace tolerance for trace-normalized matrices.
pub const TRACE_TOL: f64 = 1e-12;
/// Tolerance tying the height of a doubled-sphere point to `lambda_min`.
pub const DOUBLING_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum MatrixError {
    #[error("matrix has Frobenius norm {norm}, expected 1 within {NORM_TOL}")]
    NotNormalized { norm: f64 },
    #[error("cannot normalize a matrix of norm {norm}")]
    NormalizeZero { norm: f64 },
    #[error("matrix of shape {rows}x{cols} where {expected} was required")]
    Shape { rows: usize, cols: usize, expected: &'static str },
    #[error("matrix is not symmetric: residual {residual}")]
    NotSymmetric { residual: f64 },
    #[error("matrix is not positive semidefinite: lambda_min = {lambda_min}")]
    NotPsd { lambda_min: f64 },
    #[error("trace is {trace}, expected 1 within {TRACE_TOL}")]
    NotTraceOne { trace: f64 },
    #[error("trace {trace} too small to normalize")]
    TraceTooSmall { trace: f64 },
    #[error("height {height} does not match lambda_min {lambda_min} within {DOUBLING_TOL}")]
    HeightMismatch { height: f64, lambda_min: f64 },
    #[error("singular value decomposition did not converge")]
    SvdFailed,
}

/// A representative of unit Frobenius norm of a ray of `l x k` matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedMatrix {
    m: DMatrix<f64>,
}

impl NormalizedMatrix {
    pub fn new(m: DMatrix<f64>) -> Result<Self, MatrixError> {
        let norm = m.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(MatrixError::NotNormalized { norm });
        }
        Ok(NormalizedMatrix { m })
    }

    /// Rescales an arbitrary nonzero matrix onto the unit sphere.
    pub fn normalize(m: DMatrix<f64>) -> Result<Self, MatrixError> {
        let norm = m.norm();
        if norm < 1e-300 {
            return Err(MatrixError::NormalizeZero { norm });
        }
        Ok(NormalizedMatrix { m: m / norm })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn nrows(&self) -> usize {
        self.m.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.m.ncols()
    }

    pub fn into_inner(self) -> DMatrix<f64> {
        self.m
    }
}

/// A symmetric positive-semidefinite matrix with cached eigenvalues.
#[derive(Clone, Debug, PartialEq)]
pub struct PsdMatrix {
    m: DMatrix<f64>,
    eigenvalues: Vec<f64>,
}

impl PsdMatrix {
    pub fn new(m: DMatrix<f64>) -> Result<Self, MatrixError> {
        if m.nrows() != m.ncols() {
            return Err(MatrixError::Shape {
                rows: m.nrows(),
                cols: m.ncols(),
                expected: "square",
            });
        }
        let residual = symmetry_residual(&m);
        if residual > SYMMETRY_TOL {
            return Err(MatrixError::NotSymmetric { residual });
        }
        let eigenvalues = sym_eigenvalues(&m);
        if let Some(&lambda_min) = eigenvalues.first() {
            if lambda_min < -PSD_TOL {
                return Err(MatrixError::NotPsd { lambda_min });
            }
        }
        Ok(PsdMatrix { m, eigenvalues })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn n(&self) -> usize {
        self.m.nrows()
    }

    /// Cached eigenvalues, ascending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn trace(&self) -> f64 {
        self.m.trace()
    }

    pub fn is_trace_normalized(&self) -> bool {
        (self.trace() - 1.0).abs() <= TRACE_TOL
    }

    pub fn trace_normalized(&self) -> Result<PsdMatrix, MatrixError> {
        let t = self.trace();
        if t < 1e-12 {
            return Err(MatrixError::TraceTooSmall { trace: t });
        }
        Ok(PsdMatrix {
            m: &self.m / t,
            eigenvalues: self.eigenvalues.iter().map(|e| e / t).collect(),
        })
    }

    /// Row-major upper-triangle coordinates (the symmetric entries once).
    pub fn flatten(&self) -> Vec<f64> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                out.push(self.m[(i, j)]);
            }
        }
        out
    }

    pub fn distance(&self, other: &PsdMatrix) -> f64 {
        (&self.m - &other.m).norm()
    }
}

/// A trace-1 PSD matrix: a point of the compact hyperplane slice of the
/// PSD cone, an affine body of dimension `n(n+1)/2 - 1`.
#[derive(Clone, Debug)]
pub struct SpectrahedronPoint {
    matrix: PsdMatrix,
}

impl SpectrahedronPoint {
    pub fn new(matrix: PsdMatrix) -> Result<Self, MatrixError> {
        if !matrix.is_trace_normalized() {
            return Err(MatrixError::NotTraceOne { trace: matrix.trace() });
        }
        Ok(SpectrahedronPoint { matrix })
    }

    pub fn matrix(&self) -> &PsdMatrix {
        &self.matrix
    }

    pub fn ambient_dim(&self) -> usize {
        let n = self.matrix.n();
        n * (n + 1) / 2 - 1
    }
}

/// A trace-1 PSD matrix together with a signed height whose absolute value
/// equals `lambda_min`; the graph of the two height signs over the slice is
/// a sphere glued along the degenerate locus.
#[derive(Clone, Debug)]
pub struct DoubledSpherePoint {
    matrix: PsdMatrix,
    height: f64,
}

impl DoubledSpherePoint {
    pub fn new(matrix: PsdMatrix, height: f64) -> Result<Self, MatrixError> {
        if !matrix.is_trace_normalized() {
            return Err(MatrixError::NotTraceOne { trace: matrix.trace() });
        }
        let lambda_min = matrix.lambda_min();
        if (height.abs() - lambda_min).abs() > DOUBLING_TOL {
            return Err(MatrixError::HeightMismatch { height, lambda_min });
        }
        Ok(DoubledSpherePoint { matrix, height })
    }

    pub fn matrix(&self) -> &PsdMatrix {
        &self.matrix
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    /// `| |height| - lambda_min |`; zero on the model sphere.
    pub fn height_residual(&self) -> f64 {
        (self.height.abs() - self.matrix.lambda_min()).abs()
    }

    /// Upper-triangle entries followed by the height.
    pub fn flatten(&self) -> Vec<f64> {
        let mut out = self.matrix.flatten();
        out.push(self.height);
        out
    }

    pub fn distance(&self, other: &DoubledSpherePoint) -> f64 {
        let d2 = self
            .flatten()
            .iter()
            .zip(other.flatten().iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>();
        d2.sqrt()
    }
}

/// Gram matrix `A^T A` of a normalized matrix; trace 1 automatically, PSD,
/// invariant under `A -> QA` for orthogonal `Q`.
pub fn gram(a: &NormalizedMatrix) -> PsdMatrix {
    let g = a.matrix().transpose() * a.matrix();
    PsdMatrix::new(g).expect("a Gram matrix is symmetric PSD")
}

/// Polar decomposition `A = QP` of a square normalized matrix, `Q`
/// orthogonal and `P = sqrt(A^T A)` PSD. For singular `A` the orthogonal
/// factor is one valid choice, read off the SVD.
pub fn polar(a: &NormalizedMatrix) -> Result<(DMatrix<f64>, PsdMatrix), MatrixError> {
    if a.nrows() != a.ncols() {
        return Err(MatrixError::Shape { rows: a.nrows(), cols: a.ncols(), expected: "square" });
    }
    let svd = a.matrix().clone().svd(true, true);
    let u = svd.u.ok_or(MatrixError::SvdFailed)?;
    let v_t = svd.v_t.ok_or(MatrixError::SvdFailed)?;
    let q = &u * &v_t;
    let p = v_t.transpose() * DMatrix::from_diagonal(&svd.singular_values) * &v_t;
    // symmetrize away the last bits of rounding before constructing
    let p = 0.5 * (&p + &p.transpose());
    Ok((q, PsdMatrix::new(p)?))
}

/// The PSD factor `sqrt(A^T A)` alone; invariant under `A -> QA` for any
/// orthogonal `Q`, including reflections.
pub fn psd_sqrt_part(a: &NormalizedMatrix) -> Result<PsdMatrix, MatrixError> {
    if a.nrows() != a.ncols() {
        return Err(MatrixError::Shape { rows: a.nrows(), cols: a.ncols(), expected: "square" });
    }
    let svd = a.matrix().clone().svd(false, true);
    let v_t = svd.v_t.ok_or(MatrixError::SvdFailed)?;
    let p = v_t.transpose() * DMatrix::from_diagonal(&svd.singular_values) * &v_t;
    let p = 0.5 * (&p + &p.transpose());
    PsdMatrix::new(p)
}

/// Smallest eigenvalue of a symmetric matrix (`n <= 4` exact to `1e-12`);
/// the boundary detector of the PSD cone.
pub fn lambda_min(m: &DMatrix<f64>) -> f64 {
    *sym_eigenvalues(m)
        .first()
        .expect("lambda_min of an empty matrix")
}

/// Quotient of the space of normalized `(n-1) x n` matrices by the left
/// orthogonal group: the trace-normalized Gram matrix. The image is always
/// rank-deficient, i.e. lies on the boundary of the cone; the ray space of
/// that boundary is a sphere of dimension `(n^2 + n - 4)/2`.
pub fn quotient_yn1n_on(a: &NormalizedMatrix) -> Result<PsdMatrix, MatrixError> {
    if a.nrows() + 1 != a.ncols() {
        return Err(MatrixError::Shape {
            rows: a.nrows(),
            cols: a.ncols(),
            expected: "(n-1) x n",
        });
    }
    Ok(gram(a))
}

/// Quotient of the space of normalized `n x n` matrices by the left
/// special orthogonal group: the trace-normalized polar factor plus the
/// signed height `sign(det A) * lambda_min`. Singular matrices (where the
/// rotation in the polar decomposition is ambiguous) land on height zero,
/// the gluing locus of the two hemispheres.
pub fn quotient_ynn_son(a: &NormalizedMatrix) -> Result<DoubledSpherePoint, MatrixError> {
    let p = psd_sqrt_part(a)?;
    let p_hat = p.trace_normalized()?;
    let lambda = p_hat.lambda_min().max(0.0);
    let det = a.matrix().determinant();
    let height = if det < 0.0 { -lambda } else { lambda };
    DoubledSpherePoint::new(p_hat, height)
}

/// Membership in the trace-1 slice of the PSD cone: symmetric, trace 1 and
/// `lambda_min >= -tol`.
pub fn spectrahedron_contains(m: &DMatrix<f64>, tol: f64) -> bool {
    if m.nrows() != m.ncols() || m.is_empty() {
        return false;
    }
    if symmetry_residual(m) > SYMMETRY_TOL {
        return false;
    }
    (m.trace() - 1.0).abs() <= tol && lambda_min(m) >= -tol
}

/// The three dimension counts attached to size `n >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimFormulas {
    /// Dimension of the ray space of the cone boundary: `(n^2 + n - 4) / 2`.
    pub boundary_sphere: usize,
    /// Dimension of the doubled slice sphere: `(n^2 + n - 2) / 2`.
    pub doubled_sphere: usize,
    /// Dimension of the trace-1 slice itself: `n(n+1)/2 - 1`.
    pub spectrahedron: usize,
}

pub fn dim_formulas(n: usize) -> DimFormulas {
    assert!(n >= 2, "dimension formulas require n >= 2");
    DimFormulas {
        boundary_sphere: (n * n + n - 4) / 2,
        doubled_sphere: (n * n + n - 2) / 2,
        spectrahedron: n * (n + 1) / 2 - 1,
    }
}

/// Orthogonal-Procrustes alignment: the orthogonal (or special orthogonal)
/// `Q` minimizing `|| Q a - b ||_F`, together with the attained distance.
pub fn procrustes(
    a: &DMatrix<f64>,
    b: &DMatrix<f64>,
    special: bool,
) -> Result<(DMatrix<f64>, f64), MatrixError> {
    assert_eq!(a.shape(), b.shape(), "procrustes requires equal shapes");
    let m = b * a.transpose();
    let svd = m.svd(true, true);
    let u = svd.u.ok_or(MatrixError::SvdFailed)?;
    let v_t = svd.v_t.ok_or(MatrixError::SvdFailed)?;
    let mut q = &u * &v_t;
    if special && q.determinant() < 0.0 {
        // flip the direction of least gain
        let n = u.nrows();
        let mut d = DMatrix::identity(n, n);
        d[(n - 1, n - 1)] = -1.0;
        q = u * d * v_t;
    }
    let dist = (&q * a - b).norm();
    Ok((q, dist))
}
