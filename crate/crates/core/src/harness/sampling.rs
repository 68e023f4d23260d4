//! Deterministic sampling of the spaces under test.
//!
//! Every sample is drawn from its own counter-based substream derived from
//! `(seed, index)`, so a sample set is a pure function of its spec and is
//! identical whether points are drawn serially or in parallel batches.

use crate::algebra::TorusElement;
use crate::matrix::NormalizedMatrix;
use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::f64::consts::TAU;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SampleError {
    #[error("unknown space id {0:?}")]
    UnknownSpace(String),
}

/// The sample spaces: round spheres (by dimension), torus angle tuples,
/// and normalized matrix rays.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceId {
    /// `S^dim` embedded in `R^{dim+1}`.
    Sphere(usize),
    /// `T^rank` as angle tuples.
    Torus(usize),
    /// Unit Frobenius-norm `l x k` matrices.
    Matrix(usize, usize),
}

impl SpaceId {
    pub fn parse(s: &str) -> Result<SpaceId, SampleError> {
        let err = || SampleError::UnknownSpace(s.to_string());
        if let Some(d) = s.strip_prefix('s') {
            return d.parse().map(SpaceId::Sphere).map_err(|_| err());
        }
        if let Some(k) = s.strip_prefix('t') {
            return k.parse().map(SpaceId::Torus).map_err(|_| err());
        }
        if let Some(rest) = s.strip_prefix('y') {
            if let Some((l, k)) = rest.split_once('x') {
                if let (Ok(l), Ok(k)) = (l.parse(), k.parse()) {
                    return Ok(SpaceId::Matrix(l, k));
                }
            }
        }
        Err(err())
    }
}

impl std::fmt::Display for SpaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceId::Sphere(d) => write!(f, "s{d}"),
            SpaceId::Torus(k) => write!(f, "t{k}"),
            SpaceId::Matrix(l, k) => write!(f, "y{l}x{k}"),
        }
    }
}

/// A deterministic sampling request: same spec, same stream.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleSpec {
    pub space: SpaceId,
    pub count: usize,
    pub seed: u64,
}

/// The substream for sample `index` of stream `seed`.
pub fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A standard-normal vector normalized to the unit sphere of `R^n`.
pub fn unit_vector(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

pub fn torus_element(rank: usize, rng: &mut ChaCha8Rng) -> TorusElement {
    let angles: Vec<f64> = (0..rank).map(|_| rng.random_range(0.0..TAU)).collect();
    TorusElement::new(&angles).expect("rank within bounds")
}

pub fn normalized_matrix(l: usize, k: usize, rng: &mut ChaCha8Rng) -> NormalizedMatrix {
    let coords = unit_vector(l * k, rng);
    NormalizedMatrix::new(DMatrix::from_fn(l, k, |r, c| coords[r * k + c]))
        .expect("unit coordinates")
}

/// Haar-like orthogonal sample: QR of a Gaussian matrix with the sign
/// convention fixed; `special` folds the determinant to +1.
pub fn orthogonal(n: usize, special: bool, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let m = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = m.qr();
    let mut q = qr.q();
    let r = qr.r();
    for i in 0..n {
        if r[(i, i)] < 0.0 {
            for row in 0..n {
                q[(row, i)] = -q[(row, i)];
            }
        }
    }
    if special && q.determinant() < 0.0 {
        for row in 0..n {
            q[(row, 0)] = -q[(row, 0)];
        }
    }
    q
}

/// Batch sample of a space.
#[derive(Clone, Debug)]
pub enum Samples {
    Points(Vec<Vec<f64>>),
    Tori(Vec<TorusElement>),
    Matrices(Vec<NormalizedMatrix>),
}

pub fn sample(spec: &SampleSpec) -> Samples {
    match spec.space {
        SpaceId::Sphere(d) => Samples::Points(
            (0..spec.count)
                .map(|i| unit_vector(d + 1, &mut substream(spec.seed, i as u64)))
                .collect(),
        ),
        SpaceId::Torus(k) => Samples::Tori(
            (0..spec.count)
                .map(|i| torus_element(k, &mut substream(spec.seed, i as u64)))
                .collect(),
        ),
        SpaceId::Matrix(l, k) => Samples::Matrices(
            (0..spec.count)
                .map(|i| normalized_matrix(l, k, &mut substream(spec.seed, i as u64)))
                .collect(),
        ),
    }
}
