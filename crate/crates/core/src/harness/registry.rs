//! The registered (map, group) pairs exercised by the suites.
//!
//! Every case knows how to sample an input point and a group element, act,
//! and apply its quotient map; points and group elements travel as flat
//! `f64` vectors so the suite engine stays uniform. Orbit distances use
//! the alignment closed form where one exists (orthogonal actions on
//! matrix spaces align by the Procrustes rotation of the row space; the
//! projective plane aligns its join matrices, whose rotation orbits are
//! exactly the full-group orbits) and grid search with refinement for
//! angle groups.

use super::orbit_distance::torus_min;
use super::sampling::{orthogonal, unit_vector};
use crate::algebra::{OctonionAutomorphism, Quaternion, TorusElement, UnitQuaternion};
use crate::matrix::{gram, procrustes, psd_sqrt_part, quotient_yn1n_on, quotient_ynn_son, NormalizedMatrix, PsdMatrix};
use crate::orbit_maps::{
    act_biaxial, act_conj_circle, act_cp2, act_diag_circle, act_right_quat, act_s3s3_t3,
    act_s6_torus, act_t3, cp2_conj_to_s4, hp2_to_s5, imaginary_octonion_from_s6,
    join_coordinates, s3_biaxial_quotient, s3_conj_circle_quotient, s3s3_diag_circle_quotient,
    s3s3_t3_quotient, s4_invol_quotient, s6_from_imaginary_octonion, s6_to_s4,
    torus_invol_quotient, Cp2Point, Hp2Point, QuotientPoint, S3S3Chart, S6Point, Sign,
};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Separation-suite parameters: pairs whose orbit distance exceeds `gap`
/// must map at least `floor` apart.
#[derive(Clone, Copy, Debug)]
pub struct SeparationSpec {
    pub gap: f64,
    pub floor: f64,
}

const SEPARATION_DEFAULT: SeparationSpec = SeparationSpec { gap: 0.1, floor: 1e-4 };

/// The registered map/group pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseKind {
    /// Projective plane under the left torus.
    Hp2T3,
    /// Projective plane under the right unit quaternions.
    Hp2Right,
    /// Six-sphere under the determinant-one subtorus.
    S6T2,
    /// Six-sphere under the octonion automorphism torus.
    S6Sigma,
    /// Projective plane of complex lines under phase and conjugation.
    Cp2,
    /// Flat 2-torus under negation.
    TorusInvol,
    /// Four-sphere under coordinate conjugation.
    S4Invol,
    /// Three-sphere under conjugation by the complex circle.
    ConjCircle,
    /// Three-sphere under a biaxial 2-torus chart.
    Biaxial(Sign, Sign),
    /// Product of two 3-spheres under a rank-3 chart.
    S3S3(S3S3Chart),
    /// Product of two 3-spheres under simultaneous conjugation.
    DiagCircle,
    /// Gram projection of `n x n` rays under left orthogonal.
    Gram(usize),
    /// Polar factor of `n x n` rays under left orthogonal.
    PsdSqrt(usize),
    /// Gram projection of `(n-1) x n` rays under left orthogonal.
    Yn1n(usize),
    /// Signed polar quotient of `n x n` rays under left rotations.
    YnnSon(usize),
}

#[derive(Clone, Debug)]
pub struct MapCase {
    pub kind: CaseKind,
}

fn sign_tag(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

fn quat_from(c: &[f64]) -> Quaternion {
    Quaternion::new(c[0], c[1], c[2], c[3])
}

fn unit_quat_from(c: &[f64]) -> UnitQuaternion {
    UnitQuaternion::new_normalize(quat_from(c)).expect("unit coordinates")
}

fn matrix_from(c: &[f64], l: usize, k: usize) -> NormalizedMatrix {
    NormalizedMatrix::normalize(DMatrix::from_fn(l, k, |r, cc| c[r * k + cc]))
        .expect("unit coordinates")
}

fn matrix_coords(m: &DMatrix<f64>) -> Vec<f64> {
    let mut out = Vec::with_capacity(m.nrows() * m.ncols());
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            out.push(m[(r, c)]);
        }
    }
    out
}

fn psd_to_point(p: &PsdMatrix, rank_bound: bool) -> QuotientPoint {
    let mut residuals = vec![
        ("trace", (p.trace() - 1.0).abs()),
        ("psd_floor", (-p.lambda_min()).max(0.0)),
    ];
    if rank_bound {
        residuals.push(("rank_deficiency", p.lambda_min().max(0.0)));
    }
    QuotientPoint::new(p.flatten(), residuals)
}

fn angles(rng: &mut ChaCha8Rng, k: usize) -> Vec<f64> {
    (0..k).map(|_| rng.random_range(0.0..TAU)).collect()
}

fn wrapped_distance(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y.iter())
        .map(|(a, b)| {
            let d = a - b;
            let w = d - d.round();
            w * w
        })
        .sum::<f64>()
        .sqrt()
}

fn euclid(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y.iter())
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

impl MapCase {
    pub fn new(kind: CaseKind) -> Self {
        MapCase { kind }
    }

    /// Every gating case, in a fixed report order.
    pub fn all() -> Vec<MapCase> {
        use CaseKind::*;
        let mut kinds = vec![Hp2T3, Hp2Right, S6T2, S6Sigma, Cp2, TorusInvol, S4Invol, ConjCircle];
        for s1 in [Sign::Plus, Sign::Minus] {
            for s2 in [Sign::Plus, Sign::Minus] {
                kinds.push(Biaxial(s1, s2));
            }
        }
        kinds.push(S3S3(S3S3Chart::A));
        kinds.push(S3S3(S3S3Chart::B));
        kinds.push(DiagCircle);
        for n in 2..=4 {
            kinds.push(Gram(n));
        }
        for n in 2..=4 {
            kinds.push(PsdSqrt(n));
        }
        for n in 2..=4 {
            kinds.push(Yn1n(n));
        }
        for n in 2..=4 {
            kinds.push(YnnSon(n));
        }
        kinds.into_iter().map(MapCase::new).collect()
    }

    pub fn map_id(&self) -> String {
        use CaseKind::*;
        match self.kind {
            Hp2T3 | Hp2Right => "hp2_to_s5".to_string(),
            S6T2 | S6Sigma => "s6_to_s4".to_string(),
            Cp2 => "cp2_conj_to_s4".to_string(),
            TorusInvol => "torus_invol_quotient".to_string(),
            S4Invol => "s4_invol_quotient".to_string(),
            ConjCircle => "s3_conj_circle_quotient".to_string(),
            Biaxial(a, b) => format!("s3_biaxial_quotient[{}{}]", sign_tag(a), sign_tag(b)),
            S3S3(S3S3Chart::A) => "s3s3_t3_quotient[A]".to_string(),
            S3S3(S3S3Chart::B) => "s3s3_t3_quotient[B]".to_string(),
            DiagCircle => "s3s3_diag_circle_quotient".to_string(),
            Gram(n) => format!("gram_y{n}x{n}"),
            PsdSqrt(n) => format!("psd_sqrt_y{n}x{n}"),
            Yn1n(n) => format!("quotient_yn1n_on_y{}x{n}", n - 1),
            YnnSon(n) => format!("quotient_ynn_son_y{n}x{n}"),
        }
    }

    pub fn group_id(&self) -> String {
        use CaseKind::*;
        match self.kind {
            Hp2T3 => "t3_left".to_string(),
            Hp2Right => "s3_right".to_string(),
            S6T2 => "t2_subtorus".to_string(),
            S6Sigma => "sigma_torus".to_string(),
            Cp2 => "phase_conj".to_string(),
            TorusInvol => "negation".to_string(),
            S4Invol => "conjugation".to_string(),
            ConjCircle => "conj_circle".to_string(),
            Biaxial(..) => "t2_biaxial".to_string(),
            S3S3(..) => "t3_chart".to_string(),
            DiagCircle => "diag_conj_circle".to_string(),
            Gram(n) | PsdSqrt(n) => format!("left_o{n}"),
            Yn1n(n) => format!("left_o{}", n - 1),
            YnnSon(n) => format!("left_so{n}"),
        }
    }

    pub fn sample_point(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        use CaseKind::*;
        match self.kind {
            Hp2T3 | Hp2Right => unit_vector(12, rng),
            S6T2 | S6Sigma => unit_vector(7, rng),
            Cp2 => unit_vector(6, rng),
            TorusInvol => vec![rng.random_range(0.0..1.0), rng.random_range(0.0..1.0)],
            S4Invol => unit_vector(5, rng),
            ConjCircle | Biaxial(..) => unit_vector(4, rng),
            S3S3(..) | DiagCircle => {
                let mut v = unit_vector(4, rng);
                v.extend(unit_vector(4, rng));
                v
            }
            Gram(n) | PsdSqrt(n) | YnnSon(n) => unit_vector(n * n, rng),
            Yn1n(n) => unit_vector((n - 1) * n, rng),
        }
    }

    pub fn sample_group(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        use CaseKind::*;
        match self.kind {
            Hp2T3 => angles(rng, 3),
            Hp2Right => unit_vector(4, rng),
            S6T2 | S6Sigma => angles(rng, 2),
            Cp2 => vec![
                rng.random_range(0.0..TAU),
                f64::from(rng.random_range(0..2u8)),
            ],
            TorusInvol | S4Invol => vec![f64::from(rng.random_range(0..2u8))],
            ConjCircle | DiagCircle => angles(rng, 1),
            Biaxial(..) => angles(rng, 2),
            S3S3(..) => angles(rng, 3),
            Gram(n) | PsdSqrt(n) => matrix_coords(&orthogonal(n, false, rng)),
            Yn1n(n) => matrix_coords(&orthogonal(n - 1, false, rng)),
            YnnSon(n) => matrix_coords(&orthogonal(n, true, rng)),
        }
    }

    pub fn identity(&self) -> Vec<f64> {
        use CaseKind::*;
        match self.kind {
            Hp2T3 => vec![0.0; 3],
            Hp2Right => vec![1.0, 0.0, 0.0, 0.0],
            S6T2 | S6Sigma => vec![0.0; 2],
            Cp2 => vec![0.0, 0.0],
            TorusInvol | S4Invol => vec![0.0],
            ConjCircle | DiagCircle => vec![0.0],
            Biaxial(..) => vec![0.0; 2],
            S3S3(..) => vec![0.0; 3],
            Gram(n) | PsdSqrt(n) | YnnSon(n) => matrix_coords(&DMatrix::identity(n, n)),
            Yn1n(n) => matrix_coords(&DMatrix::identity(n - 1, n - 1)),
        }
    }

    pub fn act(&self, x: &[f64], g: &[f64]) -> Vec<f64> {
        use CaseKind::*;
        match self.kind {
            Hp2T3 => {
                let p = Hp2Point::from_coords(x).expect("unit point");
                let t = TorusElement::new(g).expect("three angles");
                act_t3(&t, &p).coords().to_vec()
            }
            Hp2Right => {
                let p = Hp2Point::from_coords(x).expect("unit point");
                act_right_quat(&p, &unit_quat_from(g)).coords().to_vec()
            }
            S6T2 => {
                let p = S6Point::from_coords(x).expect("unit point");
                let t = TorusElement::new(&[g[0], g[1], -g[0] - g[1]]).expect("rank 3");
                act_s6_torus(&t, &p).coords().to_vec()
            }
            S6Sigma => {
                let p = S6Point::from_coords(x).expect("unit point");
                let sigma = OctonionAutomorphism::from_alpha_beta(g[0], g[1]);
                s6_from_imaginary_octonion(&sigma.apply(&imaginary_octonion_from_s6(&p)))
                    .expect("automorphisms preserve the sphere")
                    .coords()
                    .to_vec()
            }
            Cp2 => {
                let p = Cp2Point::from_coords(x).expect("unit point");
                act_cp2(&p, g[0], g[1] > 0.5).coords().to_vec()
            }
            TorusInvol => {
                if g[0] > 0.5 {
                    vec![-x[0], -x[1]]
                } else {
                    x.to_vec()
                }
            }
            S4Invol => {
                if g[0] > 0.5 {
                    vec![x[0], x[1], -x[2], x[3], -x[4]]
                } else {
                    x.to_vec()
                }
            }
            ConjCircle => act_conj_circle(&unit_quat_from(x), g[0]).coords().to_vec(),
            Biaxial(a, b) => act_biaxial(&unit_quat_from(x), (a, b), g[0], g[1])
                .coords()
                .to_vec(),
            S3S3(chart) => {
                let t = TorusElement::new(g).expect("three angles");
                let (m1, m2) =
                    act_s3s3_t3(&unit_quat_from(&x[..4]), &unit_quat_from(&x[4..]), chart, &t);
                let mut out = m1.coords().to_vec();
                out.extend(m2.coords());
                out
            }
            DiagCircle => {
                let (m1, m2) =
                    act_diag_circle(&unit_quat_from(&x[..4]), &unit_quat_from(&x[4..]), g[0]);
                let mut out = m1.coords().to_vec();
                out.extend(m2.coords());
                out
            }
            Gram(n) | PsdSqrt(n) | YnnSon(n) => {
                let a = matrix_from(x, n, n);
                let q = DMatrix::from_fn(n, n, |r, c| g[r * n + c]);
                matrix_coords(&(q * a.matrix()))
            }
            Yn1n(n) => {
                let a = matrix_from(x, n - 1, n);
                let q = DMatrix::from_fn(n - 1, n - 1, |r, c| g[r * (n - 1) + c]);
                matrix_coords(&(q * a.matrix()))
            }
        }
    }

    pub fn apply(&self, x: &[f64]) -> QuotientPoint {
        use CaseKind::*;
        match self.kind {
            Hp2T3 | Hp2Right => hp2_to_s5(&Hp2Point::from_coords(x).expect("unit point")),
            S6T2 | S6Sigma => s6_to_s4(&S6Point::from_coords(x).expect("unit point")),
            Cp2 => {
                let g = cp2_conj_to_s4(&Cp2Point::from_coords(x).expect("unit point"));
                psd_to_point(&g, true)
            }
            TorusInvol => torus_invol_quotient(x[0], x[1]),
            S4Invol => s4_invol_quotient(
                x[0],
                Complex64::new(x[1], x[2]),
                Complex64::new(x[3], x[4]),
            ),
            ConjCircle => s3_conj_circle_quotient(&unit_quat_from(x)),
            Biaxial(a, b) => s3_biaxial_quotient(&unit_quat_from(x), (a, b)),
            S3S3(chart) => {
                s3s3_t3_quotient(&unit_quat_from(&x[..4]), &unit_quat_from(&x[4..]), chart)
            }
            DiagCircle => {
                s3s3_diag_circle_quotient(&unit_quat_from(&x[..4]), &unit_quat_from(&x[4..]))
            }
            Gram(n) => psd_to_point(&gram(&matrix_from(x, n, n)), false),
            PsdSqrt(n) => {
                let p = psd_sqrt_part(&matrix_from(x, n, n)).expect("square input");
                // not trace-normalized: only the PSD-ness is a constraint
                QuotientPoint::new(
                    p.flatten(),
                    vec![("psd_floor", (-p.lambda_min()).max(0.0))],
                )
            }
            Yn1n(n) => psd_to_point(
                &quotient_yn1n_on(&matrix_from(x, n - 1, n)).expect("shape checked"),
                true,
            ),
            YnnSon(n) => {
                let d = quotient_ynn_son(&matrix_from(x, n, n)).expect("square input");
                let residuals = vec![
                    ("height_vs_lambda_min", d.height_residual()),
                    ("trace", (d.matrix().trace() - 1.0).abs()),
                ];
                QuotientPoint::new(d.flatten(), residuals)
            }
        }
    }

    pub fn point_distance(&self, x: &[f64], y: &[f64]) -> f64 {
        match self.kind {
            CaseKind::TorusInvol => wrapped_distance(x, y),
            _ => euclid(x, y),
        }
    }

    /// Estimated distance between the full symmetry orbits of two points.
    pub fn orbit_distance(&self, x: &[f64], y: &[f64]) -> f64 {
        use CaseKind::*;
        match self.kind {
            Hp2T3 | Hp2Right => {
                let jx = join_coordinates(&Hp2Point::from_coords(x).expect("unit point"));
                let jy = join_coordinates(&Hp2Point::from_coords(y).expect("unit point"));
                procrustes(jx.matrix().matrix(), jy.matrix().matrix(), true)
                    .expect("3x3 alignment")
                    .1
            }
            Gram(..) | PsdSqrt(..) | Yn1n(..) | YnnSon(..) => {
                let (l, k) = self.matrix_shape();
                let a = matrix_from(x, l, k);
                let b = matrix_from(y, l, k);
                let special = matches!(self.kind, YnnSon(..));
                procrustes(a.matrix(), b.matrix(), special)
                    .expect("alignment")
                    .1
            }
            Cp2 => {
                let mut best = f64::INFINITY;
                for conj in [0.0, 1.0] {
                    let d = torus_min(1, |a| {
                        self.point_distance(&self.act(x, &[a[0], conj]), y)
                    });
                    best = best.min(d);
                }
                best
            }
            TorusInvol | S4Invol => [0.0, 1.0]
                .into_iter()
                .map(|f| self.point_distance(&self.act(x, &[f]), y))
                .fold(f64::INFINITY, f64::min),
            S6T2 | S6Sigma => torus_min(2, |a| self.point_distance(&self.act(x, a), y)),
            ConjCircle | DiagCircle => {
                torus_min(1, |a| self.point_distance(&self.act(x, a), y))
            }
            Biaxial(..) => torus_min(2, |a| self.point_distance(&self.act(x, a), y)),
            S3S3(..) => torus_min(3, |a| self.point_distance(&self.act(x, a), y)),
        }
    }

    fn matrix_shape(&self) -> (usize, usize) {
        match self.kind {
            CaseKind::Gram(n) | CaseKind::PsdSqrt(n) | CaseKind::YnnSon(n) => (n, n),
            CaseKind::Yn1n(n) => (n - 1, n),
            _ => unreachable!("not a matrix case"),
        }
    }

    pub fn invariance_tol(&self) -> f64 {
        use CaseKind::*;
        match self.kind {
            Hp2T3 | Hp2Right | S6T2 => 1e-9,
            S6Sigma => 1e-11,
            Cp2 => 1e-11,
            TorusInvol => 1e-13,
            S4Invol => 1e-13,
            ConjCircle => 1e-12,
            Biaxial(..) => 1e-11,
            S3S3(..) => 1e-11,
            DiagCircle => 1e-11,
            Gram(..) | PsdSqrt(..) | Yn1n(..) => 1e-11,
            YnnSon(..) => 1e-10,
        }
    }

    pub fn constraint_tol(&self) -> f64 {
        use CaseKind::*;
        match self.kind {
            Hp2T3 | Hp2Right => 1e-9,
            S6T2 | S6Sigma => 1e-12,
            Cp2 | Yn1n(..) => 1e-10,
            TorusInvol | S4Invol => 1e-12,
            ConjCircle | Biaxial(..) | S3S3(..) | DiagCircle => 1e-12,
            Gram(..) | PsdSqrt(..) => 1e-10,
            YnnSon(..) => 1e-9,
        }
    }

    /// Separation parameters; grid search over three angles is too coarse
    /// for a meaningful gate, so the rank-3 fiber charts opt out.
    pub fn separation(&self) -> Option<SeparationSpec> {
        use CaseKind::*;
        match self.kind {
            S3S3(..) | S6Sigma | Gram(4) | PsdSqrt(4) | Yn1n(4) | YnnSon(4) => None,
            _ => Some(SEPARATION_DEFAULT),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::sampling::substream;
    use super::*;

    #[test]
    fn identity_acts_trivially_everywhere() {
        for case in MapCase::all() {
            let mut rng = substream(11, 0);
            let x = case.sample_point(&mut rng);
            let moved = case.act(&x, &case.identity());
            let d = case.apply(&moved).distance(&case.apply(&x));
            assert!(d <= 1e-12, "{}: identity moved image by {d}", case.map_id());
        }
    }

    #[test]
    fn same_orbit_pairs_have_tiny_orbit_distance() {
        for case in MapCase::all() {
            // skip the slowest grid (rank 3) cases for unit-test budget
            if matches!(case.kind, CaseKind::S3S3(..)) {
                continue;
            }
            let mut rng = substream(13, 1);
            let x = case.sample_point(&mut rng);
            let g = case.sample_group(&mut rng);
            let y = case.act(&x, &g);
            let od = case.orbit_distance(&x, &y);
            assert!(od <= 1e-6, "{}: same-orbit distance {od}", case.map_id());
        }
    }

    #[test]
    fn antipodal_points_under_trivial_group() {
        // the estimator reduces to plain distance when the group is just
        // the identity element: antipodal 3-sphere points sit at 2
        let case = MapCase::new(CaseKind::ConjCircle);
        let x = [1.0, 0.0, 0.0, 0.0];
        let y = [-1.0, 0.0, 0.0, 0.0];
        // conjugation never moves +-1, so the orbit distance is exact
        assert!((case.orbit_distance(&x, &y) - 2.0).abs() <= 1e-12);
    }

    #[test]
    fn procrustes_and_grid_branches_agree() {
        // rotation orbit distance for 2x2 rays: closed form against a
        // 1-angle grid (the rotation group of the plane is a circle)
        let case = MapCase::new(CaseKind::YnnSon(2));
        let mut worst = 0.0f64;
        for i in 0..20u64 {
            let x = case.sample_point(&mut substream(17, 2 * i));
            let y = case.sample_point(&mut substream(17, 2 * i + 1));
            let closed = case.orbit_distance(&x, &y);
            let grid = torus_min(1, |a| {
                let q = DMatrix::from_fn(2, 2, |r, c| {
                    let m = [[a[0].cos(), -a[0].sin()], [a[0].sin(), a[0].cos()]];
                    m[r][c]
                });
                let xa = matrix_from(&x, 2, 2);
                euclid(&matrix_coords(&(q * xa.matrix())), &y)
            });
            worst = worst.max((closed - grid).abs());
        }
        assert!(worst <= 1e-4, "branches disagree by {worst}");
    }
}
