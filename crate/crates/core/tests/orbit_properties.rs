//! Cross-module properties of the projective-plane action: the stabilizer
//! search oracle against the stratum classification, and metric sanity of
//! the projective distance.

use orbispace::algebra::{Quaternion, TorusElement};
use orbispace::harness::{substream, torus_min, unit_vector};
use orbispace::orbit_maps::{
    act_t3, hp2_distance, hp2_stabilizer_check, stratify_hp2, Hp2Point, Hp2Stabilizer,
    Hp2Stratum, DEFAULT_STRATUM_TOL,
};
use std::f64::consts::{PI, TAU};

fn point_from_coords(c: &[f64]) -> Hp2Point {
    Hp2Point::from_coords(c).expect("unit coordinates")
}

/// All torus elements fixing `p` to residual `1e-9`, found by grid search
/// with local refinement from every promising cell.
fn fixers(p: &Hp2Point) -> Vec<[f64; 3]> {
    let dist = |angles: &[f64]| {
        let t = TorusElement::new(angles).expect("three angles");
        hp2_distance(&act_t3(&t, p), p)
    };
    let steps = 16;
    let step = TAU / steps as f64;
    let mut found: Vec<[f64; 3]> = Vec::new();
    for i in 0..steps {
        for j in 0..steps {
            for k in 0..steps {
                let start = [i as f64 * step, j as f64 * step, k as f64 * step];
                if dist(&start) > 0.6 {
                    continue;
                }
                // coordinate descent with a shrinking window
                let mut best = start;
                let mut best_d = dist(&best);
                let mut window = step;
                for _ in 0..45 {
                    for axis in 0..3 {
                        for offset in [-0.5, 0.5, -0.25, 0.25] {
                            let mut cand = best;
                            cand[axis] += offset * window;
                            let d = dist(&cand);
                            if d < best_d {
                                best_d = d;
                                best = cand;
                            }
                        }
                    }
                    window *= 0.5;
                }
                if best_d < 1e-9 {
                    let reduced = best.map(|a| a.rem_euclid(TAU));
                    if !found.iter().any(|f| {
                        f.iter()
                            .zip(reduced.iter())
                            .all(|(a, b)| angle_close(*a, *b, 1e-2))
                    }) {
                        found.push(reduced);
                    }
                }
            }
        }
    }
    found
}

fn angle_close(a: f64, b: f64, tol: f64) -> bool {
    let d = (a - b).rem_euclid(TAU);
    d <= tol || (TAU - d) <= tol
}

fn is_central(angles: &[f64; 3], tol: f64) -> bool {
    angles.iter().all(|&a| angle_close(a, 0.0, tol))
        || angles.iter().all(|&a| angle_close(a, PI, tol))
}

#[test]
fn generic_points_are_fixed_only_by_the_center() {
    for trial in 0..3u64 {
        let p = point_from_coords(&unit_vector(12, &mut substream(101, trial)));
        assert_eq!(stratify_hp2(&p, DEFAULT_STRATUM_TOL).stratum, Hp2Stratum::Free);
        let found = fixers(&p);
        assert!(!found.is_empty(), "the identity must be found");
        for f in &found {
            assert!(is_central(f, 1e-3), "non-central fixer {f:?} at a free point");
        }
    }
}

#[test]
fn line_points_are_fixed_by_their_circle() {
    // a generic point of the line with third coordinate zero: stabilizer
    // is the circle with the last coordinate free, and the oracle finds
    // non-central elements of it
    let mut coords = unit_vector(8, &mut substream(103, 0));
    coords.extend([0.0; 4]);
    let p = point_from_coords(&coords);
    assert_eq!(
        hp2_stabilizer_check(&p),
        Hp2Stabilizer::Circle { exponents: [0, 0, 1] }
    );
    let found = fixers(&p);
    let noncentral = found.iter().filter(|f| !is_central(f, 1e-3)).count();
    assert!(noncentral > 0, "oracle missed the stabilizer circle: {found:?}");
    for f in &found {
        // every fixer lies on the circle (t0, t1) in {(0,0), (pi,pi)}
        let central_part = (angle_close(f[0], 0.0, 1e-3) && angle_close(f[1], 0.0, 1e-3))
            || (angle_close(f[0], PI, 1e-3) && angle_close(f[1], PI, 1e-3));
        assert!(central_part, "fixer off the expected circle: {f:?}");
    }
}

#[test]
fn projective_distance_is_a_gauge_metric() {
    let mut worst_same_orbit = 0.0f64;
    for trial in 0..50u64 {
        let mut rng = substream(107, trial);
        let p = point_from_coords(&unit_vector(12, &mut rng));
        let q = point_from_coords(&unit_vector(12, &mut rng));
        // symmetry
        let d = hp2_distance(&p, &q);
        assert!((d - hp2_distance(&q, &p)).abs() <= 1e-12);
        // gauge invariance: right multiplication is free
        let g = unit_vector(4, &mut rng);
        let gq = Quaternion::new(g[0], g[1], g[2], g[3]);
        let moved = Hp2Point::normalize([
            p.coordinates()[0] * gq,
            p.coordinates()[1] * gq,
            p.coordinates()[2] * gq,
        ])
        .unwrap();
        worst_same_orbit = worst_same_orbit.max(hp2_distance(&p, &moved));
    }
    assert!(worst_same_orbit <= 1e-12, "gauge moved the metric by {worst_same_orbit}");
}

#[test]
fn torus_min_certifies_orbit_closeness_on_the_sphere_quotient() {
    // the estimator drives the same-orbit distance below 1e-6 on the
    // six-sphere torus action
    use orbispace::orbit_maps::{act_s6_torus, S6Point};
    for trial in 0..5u64 {
        let mut rng = substream(109, trial);
        let p = S6Point::from_coords(&unit_vector(7, &mut rng)).unwrap();
        let t = TorusElement::new(&[1.1, -0.4, 2.2]).unwrap();
        let q = act_s6_torus(&t, &p);
        let d = torus_min(3, |angles| {
            let g = TorusElement::new(angles).expect("rank 3");
            let moved = act_s6_torus(&g, &p);
            moved
                .coords()
                .iter()
                .zip(q.coords().iter())
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
        });
        assert!(d <= 1e-6, "orbit distance estimate {d}");
    }
}
