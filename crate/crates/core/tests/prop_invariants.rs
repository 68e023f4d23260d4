//! Property tests over randomized inputs: constraint residuals of the
//! fiber quotients, torus-element arithmetic, normal-form factorizations,
//! and serialization round trips.

use orbispace::algebra::{Quaternion, TorusElement, UnitQuaternion};
use orbispace::homology::{smith_normal_form, IntMat};
use orbispace::model_spaces::{
    Polygon, QtCharPair, QuoricColor, QuoricFunctor,
};
use orbispace::orbit_maps::{
    hopf, s3_biaxial_quotient, s3s3_t3_quotient, S3S3Chart, Sign,
};
use proptest::prelude::*;

fn unit_quaternion() -> impl Strategy<Value = UnitQuaternion> {
    (
        -1.0f64..1.0,
        -1.0f64..1.0,
        -1.0f64..1.0,
        -1.0f64..1.0,
    )
        .prop_filter_map("nonzero quaternion", |(a, b, c, d)| {
            UnitQuaternion::new_normalize(Quaternion::new(a, b, c, d)).ok()
        })
}

proptest! {
    /// The fiber-quotient images satisfy their modulus constraints for
    /// arbitrary unit inputs, not just the harness samples.
    #[test]
    fn fiber_constraints_hold(s1 in unit_quaternion(), s2 in unit_quaternion()) {
        for chart in [S3S3Chart::A, S3S3Chart::B] {
            let img = s3s3_t3_quotient(&s1, &s2, chart);
            prop_assert!(img.residual("radius").unwrap() <= 1e-12);
        }
        let img = s3_biaxial_quotient(&s1, (Sign::Plus, Sign::Minus));
        prop_assert!(img.residual("affine").unwrap() <= 1e-12);
    }

    /// The circle quotient of the unit quaternions lands on the unit
    /// 2-sphere wherever it is evaluated.
    #[test]
    fn hopf_image_is_unit(h in unit_quaternion()) {
        let v = hopf(&h);
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        prop_assert!((norm - 1.0).abs() <= 1e-12);
    }

    /// Torus composition with the inverse returns to the identity, and
    /// stored angles stay reduced.
    #[test]
    fn torus_inverse_law(angles in prop::collection::vec(-20.0f64..20.0, 1..=4)) {
        let t = TorusElement::new(&angles).unwrap();
        let id = TorusElement::identity(t.rank()).unwrap();
        prop_assert!(t.compose(&t.inverse()).approx_eq(&id, 1e-12));
        for i in 0..t.rank() {
            prop_assert!((0.0..std::f64::consts::TAU).contains(&t.angle(i)));
        }
    }

    /// The normal form factors exactly with unimodular transforms and a
    /// divisibility chain, over arbitrary small integer matrices. The
    /// triple product is verified in 128-bit arithmetic: the transforms
    /// are unimodular but their entries can be large.
    #[test]
    fn smith_normal_form_factors(
        rows in 1usize..5,
        cols in 1usize..5,
        entries in prop::collection::vec(-60i64..60, 16),
    ) {
        let m = IntMat::from_fn(rows, cols, |r, c| entries[(r * cols + c) % entries.len()]);
        let snf = smith_normal_form(&m).unwrap();
        for i in 0..rows {
            for j in 0..cols {
                let mut acc: i128 = 0;
                for k in 0..rows {
                    for l in 0..cols {
                        acc += snf.u.get(i, k) as i128
                            * m.get(k, l) as i128
                            * snf.v.get(l, j) as i128;
                    }
                }
                prop_assert_eq!(acc, snf.d.get(i, j) as i128, "entry ({}, {})", i, j);
            }
        }
        prop_assert_eq!(snf.u.det_small().abs(), 1);
        prop_assert_eq!(snf.v.det_small().abs(), 1);
        let f = snf.invariant_factors();
        for w in f.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
    }

    /// Every valid coloring line parses back to itself.
    #[test]
    fn coloring_round_trip(colors in prop::collection::vec(0usize..3, 3..=10)) {
        let m = colors.len();
        let colors: Vec<QuoricColor> = colors.into_iter().map(|c| QuoricColor::ALL[c]).collect();
        let qf = QuoricFunctor::new(Polygon::new(m).unwrap(), colors).unwrap();
        let back: QuoricFunctor = qf.to_string().parse().unwrap();
        prop_assert_eq!(back, qf);
    }

    /// Characteristic-pair lines parse back to themselves for arbitrary
    /// primitive labels.
    #[test]
    fn char_pair_round_trip(raw in prop::collection::vec((-9i64..10, -9i64..10), 3..=8)) {
        fn gcd(a: i64, b: i64) -> i64 {
            let (mut a, mut b) = (a.abs(), b.abs());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        }
        let labels: Vec<[i64; 2]> = raw
            .into_iter()
            .map(|(a, b)| if gcd(a, b) == 1 { [a, b] } else { [1, 0] })
            .collect();
        let cp = QtCharPair::new(Polygon::new(labels.len()).unwrap(), labels).unwrap();
        let back: QtCharPair = cp.to_string().parse().unwrap();
        prop_assert_eq!(back, cp);
    }
}
