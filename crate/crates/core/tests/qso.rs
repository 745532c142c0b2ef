mod common;

use cubic_core::{
    apply_qso, apply_qso_symmetric, permute_frontal, random, Cubic3Stochastic, FiberAxis,
    Permutation, SimplexVector, StochasticType, Tolerance,
};
use cubic_core::stochastic::validate_simplex;
use proptest::prelude::*;

const TIGHT: f64 = 1e-12;

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn naive_qso(p: &Cubic3Stochastic, x: &[f64]) -> Vec<f64> {
    let n = p.n();
    (0..n)
        .map(|k| {
            let mut acc = 0.0;
            for i in 0..n {
                for j in 0..n {
                    acc += p.get(i, j, k) * x[i] * x[j];
                }
            }
            acc
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn image_lies_in_simplex(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let p = random::cubic3(n, &mut rng);
        let x = random::simplex(n, &mut rng);
        let v = apply_qso(&p, &x).unwrap();
        prop_assert!(validate_simplex(v.as_slice(), Tolerance::new(1e-12).unwrap()).is_ok());
        prop_assert!(max_diff(v.as_slice(), &naive_qso(&p, x.as_slice())) <= 1e-13);
    }

    #[test]
    fn vertices_map_to_diagonal_tubes(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let p = random::symmetric_cubic3(n, &mut rng);
        for m in 0..n {
            let v = apply_qso_symmetric(&p, &SimplexVector::vertex(n, m).unwrap(), Tolerance::default()).unwrap();
            let tube = p.as_cubic().fiber(FiberAxis::Tube, m, m).unwrap();
            prop_assert_eq!(v.as_slice(), tube.as_slice());
        }
    }

    #[test]
    fn permutation_relabels_output(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let p = random::cubic3(n, &mut rng);
        let sigma = random::permutation(n, &mut rng);
        let q = permute_frontal(&sigma, &p).unwrap();
        prop_assert!(q.as_cubic().is_type(StochasticType::Three, Tolerance::default()));
        let x = random::simplex(n, &mut rng);
        let v = apply_qso(&p, &x).unwrap();
        let w = apply_qso(&q, &x).unwrap();
        for k in 0..n {
            prop_assert!((w.as_slice()[k] - v.as_slice()[sigma.apply(k)]).abs() <= TIGHT);
        }
    }

    #[test]
    fn right_action_law(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let p = random::cubic3(n, &mut rng);
        let sigma = random::permutation(n, &mut rng);
        let tau = random::permutation(n, &mut rng);
        let composed = permute_frontal(&sigma.compose(&tau).unwrap(), &p).unwrap();
        let nested = permute_frontal(&tau, &permute_frontal(&sigma, &p).unwrap()).unwrap();
        prop_assert_eq!(&composed, &nested);
        prop_assert_eq!(permute_frontal(&Permutation::identity(n), &p).unwrap(), p.clone());
        let back = permute_frontal(&sigma.inverse(), &permute_frontal(&sigma, &p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn left_action_order_fails_on_witness() {
    let p = Cubic3Stochastic::from_frontal_slices(
        &[
            [[1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]],
            [[0.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 0.0]],
            [[0.0, 0.0, 1.0], [0.0, 0.0, 1.0], [1.0, 1.0, 1.0]],
        ],
        Tolerance::default(),
    )
    .unwrap();
    let sigma = Permutation::from_one_based(&[2, 1, 3]).unwrap();
    let tau = Permutation::from_one_based(&[1, 3, 2]).unwrap();
    let composed = permute_frontal(&sigma.compose(&tau).unwrap(), &p).unwrap();
    let left_order = permute_frontal(&sigma, &permute_frontal(&tau, &p).unwrap()).unwrap();
    assert_ne!(composed, left_order);
}

#[test]
fn asymmetric_operator_rejected_by_checked_form() {
    let p = Cubic3Stochastic::from_frontal_slices(
        &[[[1.0, 1.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 1.0]]],
        Tolerance::default(),
    )
    .unwrap();
    let x = SimplexVector::uniform(2);
    assert!(apply_qso_symmetric(&p, &x, Tolerance::default()).is_err());
    assert!(apply_qso(&p, &x).is_ok());
}
