//! Suites for the normed-algebra layer: the octonion basis table, the
//! automorphism torus, and its matching with the coordinate torus on the
//! embedded six-sphere.

use super::sampling::{substream, unit_vector};
use super::TestReport;
use crate::algebra::{Octonion, OctonionAutomorphism, TorusElement};
use crate::orbit_maps::{
    act_s6_torus, hp2_to_s5, imaginary_octonion_from_s6, s6_from_imaginary_octonion, Hp2Point,
};
use rand::Rng;
use rayon::prelude::*;
use std::time::Instant;

fn report(
    suite: &str,
    map: &str,
    group: &str,
    samples: usize,
    seed: u64,
    tol: f64,
    residual: f64,
    t0: Instant,
) -> TestReport {
    TestReport {
        suite: suite.to_string(),
        map: map.to_string(),
        group: group.to_string(),
        samples,
        seed,
        tolerance: tol,
        max_residual: residual,
        min_separation: None,
        pass: residual <= tol,
        millis: t0.elapsed().as_millis() as u64,
    }
}

/// Exact check of the 64 basis products: each is a signed basis element of
/// norm exactly 1. The tolerance is zero.
pub fn octonion_basis_suite() -> TestReport {
    let t0 = Instant::now();
    let mut residual = 0.0f64;
    for p in 0..8 {
        for q in 0..8 {
            let prod = Octonion::basis(p) * Octonion::basis(q);
            residual = residual.max((prod.norm_sq() - 1.0).abs());
            // distance to the nearest signed basis element
            let (sign, idx) = Octonion::basis_product(p, q);
            let target = Octonion::basis(idx).scaled(f64::from(sign));
            residual = residual.max(prod.distance(&target));
            // alternativity on the pair
            let x = Octonion::basis(p);
            let y = Octonion::basis(q);
            residual = residual.max((x * (x * y)).distance(&((x * x) * y)));
        }
    }
    report("algebra", "oct_mul", "basis_pairs", 64, 0, 0.0, residual, t0)
}

/// Automorphism residual `sigma(xy) - sigma(x) sigma(y)` over sampled
/// angle triples and unit octonion pairs.
pub fn sigma_automorphism_suite(triples: usize, pairs_per: usize, seed: u64) -> TestReport {
    let t0 = Instant::now();
    let worst = (0..triples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(seed, i);
            let alpha = rng.random_range(0.0..std::f64::consts::TAU);
            let beta = rng.random_range(0.0..std::f64::consts::TAU);
            let sigma = OctonionAutomorphism::from_alpha_beta(alpha, beta);
            let mut local = 0.0f64;
            for _ in 0..pairs_per {
                let x = Octonion::new(unit_vector(8, &mut rng).try_into().expect("8 coords"));
                let y = Octonion::new(unit_vector(8, &mut rng).try_into().expect("8 coords"));
                let lhs = sigma.apply(&(x * y));
                let rhs = sigma.apply(&x) * sigma.apply(&y);
                local = local.max(lhs.distance(&rhs));
            }
            local
        })
        .reduce(|| 0.0, f64::max);
    report(
        "algebra",
        "sigma_apply",
        "octonion_pairs",
        triples * pairs_per,
        seed,
        1e-12,
        worst,
        t0,
    )
}

/// Orthogonality of the automorphism matrices.
pub fn sigma_orthogonality_suite(samples: usize, seed: u64) -> TestReport {
    let t0 = Instant::now();
    let worst = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(seed, i);
            let sigma = OctonionAutomorphism::from_alpha_beta(
                rng.random_range(0.0..std::f64::consts::TAU),
                rng.random_range(0.0..std::f64::consts::TAU),
            );
            let m = sigma.matrix();
            (m.transpose() * m - nalgebra::SMatrix::<f64, 8, 8>::identity()).norm()
        })
        .reduce(|| 0.0, f64::max);
    report("algebra", "sigma_matrix", "orthogonality", samples, seed, 1e-14, worst, t0)
}

/// The torus homomorphism law: matrices of compositions are products of
/// matrices.
pub fn sigma_composition_suite(samples: usize, seed: u64) -> TestReport {
    let t0 = Instant::now();
    let worst = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(seed, i);
            let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
                OctonionAutomorphism::from_alpha_beta(
                    rng.random_range(0.0..std::f64::consts::TAU),
                    rng.random_range(0.0..std::f64::consts::TAU),
                )
            };
            let s1 = draw(&mut rng);
            let s2 = draw(&mut rng);
            (s1.matrix() * s2.matrix() - s1.compose(&s2).matrix()).norm()
        })
        .reduce(|| 0.0, f64::max);
    report("algebra", "sigma_matrix", "composition", samples, seed, 1e-12, worst, t0)
}

/// Restriction agreement: on unit imaginary octonions the automorphism
/// torus acts exactly as the determinant-one coordinate torus.
pub fn sigma_standard_torus_suite(samples: usize, seed: u64) -> TestReport {
    let t0 = Instant::now();
    let worst = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(seed, i);
            let coords = unit_vector(7, &mut rng);
            let p = crate::orbit_maps::S6Point::from_coords(&coords).expect("unit");
            let alpha = rng.random_range(0.0..std::f64::consts::TAU);
            let beta = rng.random_range(0.0..std::f64::consts::TAU);
            let sigma = OctonionAutomorphism::from_alpha_beta(alpha, beta);
            let via_octonions =
                s6_from_imaginary_octonion(&sigma.apply(&imaginary_octonion_from_s6(&p)))
                    .expect("imaginary preserved");
            let t = TorusElement::new(&[-alpha, -beta, alpha + beta]).expect("rank 3");
            let direct = act_s6_torus(&t, &p);
            via_octonions
                .coords()
                .iter()
                .zip(direct.coords().iter())
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
        })
        .reduce(|| 0.0, f64::max);
    report("algebra", "sigma_apply", "standard_torus", samples, seed, 1e-12, worst, t0)
}

/// The three torus-fixed points of the projective plane map to pairwise
/// distant model points; the floor is 0.1.
pub fn hp2_fixed_points_suite() -> TestReport {
    let t0 = Instant::now();
    let images: Vec<_> = (0..3).map(|i| hp2_to_s5(&Hp2Point::fixed_point(i))).collect();
    let mut min_sep = f64::INFINITY;
    for i in 0..3 {
        for j in (i + 1)..3 {
            min_sep = min_sep.min(images[i].distance(&images[j]));
        }
    }
    let floor = 0.1;
    TestReport {
        suite: "separation".to_string(),
        map: "hp2_to_s5".to_string(),
        group: "fixed_points".to_string(),
        samples: 3,
        seed: 0,
        tolerance: 0.0,
        max_residual: floor - min_sep,
        min_separation: Some(min_sep),
        pass: floor - min_sep <= 0.0,
        millis: t0.elapsed().as_millis() as u64,
    }
}
