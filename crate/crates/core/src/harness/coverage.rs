//! Coverage statistics of image samples: advisory evidence that a map
//! reaches all of its model, never a pass/fail gate.

use super::registry::MapCase;
use super::sampling::substream;
use serde::Serialize;

/// Nearest-neighbor spacing statistics of `samples` image points, plus an
/// empirical hole estimate from probe points of the same distribution.
/// Pairwise statistics are computed on a deterministic subsample when the
/// cloud is large.
#[derive(Clone, Debug, Serialize)]
pub struct CoverageReport {
    pub map: String,
    pub samples: usize,
    pub seed: u64,
    pub median_nn_spacing: Option<f64>,
    pub max_hole_radius: Option<f64>,
}

impl CoverageReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("coverage serializes")
    }
}

const PAIRWISE_CAP: usize = 1500;
const PROBE_COUNT: usize = 300;

pub fn coverage_report(case: &MapCase, samples: usize, seed: u64) -> CoverageReport {
    if samples == 0 {
        return CoverageReport {
            map: case.map_id(),
            samples,
            seed,
            median_nn_spacing: None,
            max_hole_radius: None,
        };
    }
    let cloud: Vec<Vec<f64>> = (0..samples as u64)
        .map(|i| {
            let x = case.sample_point(&mut substream(seed, i));
            case.apply(&x).coords().to_vec()
        })
        .collect();

    let k = cloud.len().min(PAIRWISE_CAP);
    let dist = |a: &[f64], b: &[f64]| -> f64 {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
    };
    let mut nn: Vec<f64> = (0..k)
        .map(|i| {
            (0..cloud.len())
                .filter(|&j| j != i)
                .map(|j| dist(&cloud[i], &cloud[j]))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    nn.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median = nn.get(nn.len() / 2).copied();

    let probes = PROBE_COUNT.min(samples.max(1));
    let max_hole = (0..probes as u64)
        .map(|j| {
            let x = case.sample_point(&mut substream(seed.wrapping_add(1), samples as u64 + j));
            let img = case.apply(&x).coords().to_vec();
            cloud
                .iter()
                .map(|c| dist(&img, c))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0f64, f64::max);

    CoverageReport {
        map: case.map_id(),
        samples,
        seed,
        median_nn_spacing: median,
        max_hole_radius: Some(max_hole),
    }
}

#[cfg(test)]
mod tests {
    use super::super::registry::CaseKind;
    use super::*;

    #[test]
    fn empty_report() {
        let case = MapCase::new(CaseKind::TorusInvol);
        let r = coverage_report(&case, 0, 1);
        assert_eq!(r.median_nn_spacing, None);
        assert_eq!(r.max_hole_radius, None);
    }

    #[test]
    fn doubling_samples_shrinks_spacing() {
        let case = MapCase::new(CaseKind::TorusInvol);
        let small = coverage_report(&case, 400, 9).median_nn_spacing.unwrap();
        let large = coverage_report(&case, 800, 9).median_nn_spacing.unwrap();
        assert!(large < small, "{large} vs {small}");
    }
}
