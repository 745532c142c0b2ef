mod common;

use cubic_core::{
    random, ConvexCombine, Cubic, Cubic3Stochastic, CubicStochastic12, Error, ErrorKind, Matrix, SimplexVector,
    StochasticMatrix, StochasticType, Tolerance,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn admission_round_trip(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let tol = Tolerance::default();
        let p = random::cubic12(n, &mut rng);
        prop_assert_eq!(CubicStochastic12::new(p.as_cubic().clone(), tol).unwrap(), p);
        let q = random::cubic3(n, &mut rng);
        prop_assert_eq!(Cubic3Stochastic::new(q.as_cubic().clone(), tol).unwrap(), q.clone());
        let a = random::stochastic_matrix(n, &mut rng);
        prop_assert_eq!(StochasticMatrix::new(a.as_matrix().clone(), tol).unwrap(), a);
        let x = random::simplex(n, &mut rng);
        prop_assert_eq!(SimplexVector::new(x.as_slice().to_vec(), tol).unwrap(), x);
    }

    #[test]
    fn convex_combinations_close(seed in any::<u64>(), n in 1usize..=6, lambda in 0.0f64..=1.0) {
        let mut rng = common::rng(seed);
        let tol = Tolerance::default();
        let p = random::cubic12(n, &mut rng).convex_combine(&random::cubic12(n, &mut rng), lambda).unwrap();
        prop_assert!(p.as_cubic().is_type(StochasticType::Type12, tol));
        let q = random::cubic3(n, &mut rng).convex_combine(&random::cubic3(n, &mut rng), lambda).unwrap();
        prop_assert!(q.as_cubic().is_type(StochasticType::Three, tol));
        let a = random::stochastic_matrix(n, &mut rng).convex_combine(&random::stochastic_matrix(n, &mut rng), lambda).unwrap();
        prop_assert!(StochasticMatrix::new(a.into_matrix(), tol).is_ok());
        let x = random::simplex(n, &mut rng).convex_combine(&random::simplex(n, &mut rng), lambda).unwrap();
        prop_assert!(SimplexVector::new(x.into_vec(), tol).is_ok());
    }

    #[test]
    fn matrix_products_close(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let a = random::stochastic_matrix(n, &mut rng);
        let b = random::stochastic_matrix(n, &mut rng);
        let ab = a.product(&b).unwrap();
        prop_assert!(StochasticMatrix::new(ab.as_matrix().clone(), Tolerance::default()).is_ok());
        prop_assert!(ab.as_matrix().max_abs_diff(&common::matmul(a.as_matrix(), b.as_matrix())) <= 1e-15);
    }
}

#[test]
fn tiny_negatives_clamped_within_eps() {
    let tol = Tolerance::default();
    let m = Matrix::from_rows(&[[1.0 + 5e-10, 0.3], [-5e-10, 0.7]]).unwrap();
    let a = StochasticMatrix::new(m, tol).unwrap();
    assert_eq!(a.get(1, 0), 0.0);
    let m = Matrix::from_rows(&[[1.0, 0.3], [-1e-8, 0.7]]).unwrap();
    assert_eq!(StochasticMatrix::new(m, tol).unwrap_err().kind(), ErrorKind::Validation);
}

#[test]
fn shape_errors() {
    assert!(matches!(Cubic::new(2, vec![0.0; 7]), Err(Error::Length { .. })));
    assert!(matches!(Cubic::new(0, vec![]), Err(Error::ZeroDimension)));
    let p = CubicStochastic12::uniform(2);
    let q = CubicStochastic12::uniform(3);
    assert_eq!(cubic_core::star_mul(&p, &q).unwrap_err().kind(), ErrorKind::Shape);
}

#[test]
fn violation_messages_are_one_based() {
    let grid = Cubic::from_fn(2, |i, j, k| if k == 1 && i == 0 && j == 0 { 0.5 } else { 0.25 });
    let err = CubicStochastic12::new(grid, Tolerance::default()).unwrap_err();
    let text = err.to_string();
    assert!(text.contains("k=2"), "{text}");
}
