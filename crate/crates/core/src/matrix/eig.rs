//! Symmetric eigenvalues for matrices of size at most 4.
//!
//! Sizes 2 and 3 use closed forms (the 3x3 case through the trigonometric
//! solution of the characteristic cubic); size 4 falls back to cyclic
//! Jacobi sweeps.

use nalgebra::DMatrix;

pub const SYMMETRY_TOL: f64 = 1e-13;

/// Maximum absolute asymmetry `|m_ij - m_ji|`.
pub fn symmetry_residual(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst
}

/// Eigenvalues of a symmetric matrix, ascending. Panics if the input is not
/// square or not symmetric within `1e-13`.
pub fn sym_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "matrix must be square");
    assert!(
        symmetry_residual(m) <= SYMMETRY_TOL,
        "matrix is not symmetric within {SYMMETRY_TOL}"
    );
    let mut eigs = match n {
        0 => Vec::new(),
        1 => vec![m[(0, 0)]],
        2 => eig2(m),
        3 => eig3(m),
        _ => jacobi(m),
    };
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigs
}

fn eig2(m: &DMatrix<f64>) -> Vec<f64> {
    let (a, b, c) = (m[(0, 0)], 0.5 * (m[(0, 1)] + m[(1, 0)]), m[(1, 1)]);
    let mean = 0.5 * (a + c);
    let r = (0.25 * (a - c) * (a - c) + b * b).sqrt();
    vec![mean - r, mean + r]
}

/// Trigonometric solution of the characteristic cubic.
fn eig3(m: &DMatrix<f64>) -> Vec<f64> {
    let a00 = m[(0, 0)];
    let a11 = m[(1, 1)];
    let a22 = m[(2, 2)];
    let a01 = 0.5 * (m[(0, 1)] + m[(1, 0)]);
    let a02 = 0.5 * (m[(0, 2)] + m[(2, 0)]);
    let a12 = 0.5 * (m[(1, 2)] + m[(2, 1)]);

    let p1 = a01 * a01 + a02 * a02 + a12 * a12;
    if p1 == 0.0 {
        return vec![a00, a11, a22];
    }
    let q = (a00 + a11 + a22) / 3.0;
    let p2 = (a00 - q).powi(2) + (a11 - q).powi(2) + (a22 - q).powi(2) + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    let b00 = (a00 - q) / p;
    let b11 = (a11 - q) / p;
    let b22 = (a22 - q) / p;
    let b01 = a01 / p;
    let b02 = a02 / p;
    let b12 = a12 / p;
    let det_b = b00 * (b11 * b22 - b12 * b12) - b01 * (b01 * b22 - b12 * b02)
        + b02 * (b01 * b12 - b11 * b02);
    let r = (det_b / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let e1 = q + 2.0 * p * phi.cos();
    let e3 = q + 2.0 * p * (phi + 2.0 * std::f64::consts::FRAC_PI_3).cos();
    let e2 = 3.0 * q - e1 - e3;
    vec![e1, e2, e3]
}

/// Cyclic Jacobi sweeps; quadratic convergence, a handful of sweeps for
/// the sizes used here.
fn jacobi(m: &DMatrix<f64>) -> Vec<f64> {
    let n = m.nrows();
    let mut a = m.clone();
    // symmetrize once so rotations preserve symmetry exactly
    for i in 0..n {
        for j in (i + 1)..n {
            let v = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
    let scale = a.iter().fold(0.0f64, |acc, v| acc.max(v.abs())).max(1e-300);
    for _sweep in 0..50 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off = off.max(a[(i, j)].abs());
            }
        }
        if off <= 1e-16 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= 1e-18 * scale {
                    continue;
                }
                let theta = 0.5 * (2.0 * apq).atan2(a[(q, q)] - a[(p, p)]);
                let (s, c) = theta.sin_cos();
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[(i, i)]).collect()
}
