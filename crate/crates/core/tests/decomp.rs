mod common;

use cubic_core::algebra::mixing_matrix;
use cubic_core::stochastic::validate_column_stochastic;
use cubic_core::{
    accompanying_first, accompanying_second, matricize_frontal, random, star_mul, transpose12, FiberAxis, SliceAxis,
    Tolerance, Weights,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn accompanying_matrices_are_stochastic(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let p = random::cubic12(n, &mut rng);
        let tol = Tolerance::default();
        prop_assert!(validate_column_stochastic(accompanying_first(&p).as_matrix(), tol).is_ok());
        prop_assert!(validate_column_stochastic(accompanying_second(&p).as_matrix(), tol).is_ok());
        prop_assert!(accompanying_first(&p).as_matrix().max_abs_diff(&common::marginal_first(p.as_cubic())) <= 1e-15);
        prop_assert!(accompanying_second(&p).as_matrix().max_abs_diff(&common::marginal_second(p.as_cubic())) <= 1e-15);
        prop_assert_eq!(accompanying_second(&p), accompanying_first(&transpose12(&p)));
    }

    #[test]
    fn transpose_slice_lemma(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let p = random::cubic12(n, &mut rng);
        let t = transpose12(&p);
        let (pc, tc) = (p.as_cubic(), t.as_cubic());
        for h in 0..n {
            prop_assert_eq!(tc.slice(SliceAxis::Horizontal, h).unwrap(), pc.slice(SliceAxis::Lateral, h).unwrap());
            prop_assert_eq!(tc.slice(SliceAxis::Lateral, h).unwrap(), pc.slice(SliceAxis::Horizontal, h).unwrap());
            prop_assert_eq!(tc.slice(SliceAxis::Frontal, h).unwrap(), pc.slice(SliceAxis::Frontal, h).unwrap().transpose());
        }
        let s = p.symmetrized();
        prop_assert!(accompanying_first(&s).as_matrix().max_abs_diff(accompanying_second(&s).as_matrix()) <= 1e-15);
    }

    #[test]
    fn frontal_masses_and_tube_totals(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let p = random::cubic12(n, &mut rng);
        for k in 0..n {
            prop_assert!((p.as_cubic().slice(SliceAxis::Frontal, k).unwrap().total() - 1.0).abs() <= 1e-12);
        }
        let tubes: f64 = p.as_cubic().fibers(FiberAxis::Tube).fibers.iter().flatten().sum();
        prop_assert!((tubes - n as f64).abs() <= 1e-12);
        let q = random::cubic3(n, &mut rng);
        for f in q.as_cubic().fibers(FiberAxis::Tube).fibers {
            prop_assert!((f.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn matricization_round_trip(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let p = random::cubic12(n, &mut rng);
        let m = matricize_frontal(p.as_cubic());
        prop_assert_eq!(&m.fold().unwrap(), p.as_cubic());
        for h in 0..n {
            prop_assert_eq!(m.block(h).unwrap(), p.as_cubic().slice(SliceAxis::Frontal, h).unwrap());
        }
    }

    /// The tube-times-accompanying-columns form of `⋆` agrees with the double sum.
    #[test]
    fn star_two_forms(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = common::rng(seed);
        let a = random::cubic12(n, &mut rng);
        let b = random::cubic12(n, &mut rng);
        let b1 = accompanying_first(&b);
        let b2 = accompanying_second(&b);
        let via_columns = cubic_core::Cubic::from_fn(n, |i, j, k| {
            let tube = a.as_cubic().fiber(FiberAxis::Tube, i, j).unwrap();
            (0..n).map(|r| tube[r] * (0.5 * b1.get(r, k) + 0.5 * b2.get(r, k))).sum()
        });
        prop_assert!(via_columns.max_abs_diff(&common::star(&a, &b)) <= 1e-13);
        prop_assert!(star_mul(&a, &b).unwrap().as_cubic().max_abs_diff(&via_columns) <= 1e-13);
        let c = mixing_matrix(&b, Weights::STAR);
        prop_assert!(validate_column_stochastic(&c, Tolerance::default()).is_ok());
    }
}
