//! Random valid instances, for property tests and benchmarks.
//!
//! Entries are drawn uniformly from `[0, 1)`, about one in eight is zeroed to
//! exercise sparse supports, and each constrained group is normalized to sum
//! to 1.

use alloc::vec::Vec;

use rand::Rng;

use crate::cubic::Cubic;
use crate::markov::MixingWeights;
use crate::matrix::Matrix;
use crate::qso::Permutation;
use crate::stochastic::{Cubic3Stochastic, CubicStochastic12, SimplexVector, StochasticMatrix, Weights};
use crate::tolerance::Tolerance;

fn distribution<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let raw: Vec<f64> = (0..len)
            .map(|_| if rng.random_range(0..8) == 0 { 0.0 } else { rng.random::<f64>() })
            .collect();
        let total: f64 = raw.iter().sum();
        if total > 1e-3 {
            return raw.into_iter().map(|v| v / total).collect();
        }
    }
}

pub fn simplex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SimplexVector {
    SimplexVector::from_vec_unchecked(distribution(n, rng))
}

pub fn stochastic_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> StochasticMatrix {
    let columns: Vec<Vec<f64>> = (0..n).map(|_| distribution(n, rng)).collect();
    StochasticMatrix::from_matrix_unchecked(Matrix::from_fn(n, |i, j| columns[j][i]))
}

pub fn cubic12<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CubicStochastic12 {
    let slices: Vec<Vec<f64>> = (0..n).map(|_| distribution(n * n, rng)).collect();
    CubicStochastic12::from_cubic_unchecked(Cubic::from_fn(n, |i, j, k| slices[k][i * n + j]))
}

/// `½ (R + R^T(1,2))` for a random `R`.
pub fn symmetric_cubic12<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CubicStochastic12 {
    cubic12(n, rng).symmetrized()
}

pub fn cubic3<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Cubic3Stochastic {
    let tubes: Vec<Vec<f64>> = (0..n * n).map(|_| distribution(n, rng)).collect();
    Cubic3Stochastic::from_cubic_unchecked(Cubic::from_fn(n, |i, j, k| tubes[i * n + j][k]))
}

/// 3-stochastic with `p_ijk = p_jik`.
pub fn symmetric_cubic3<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Cubic3Stochastic {
    let tubes: Vec<Vec<f64>> = (0..n * n).map(|_| distribution(n, rng)).collect();
    Cubic3Stochastic::from_cubic_unchecked(Cubic::from_fn(n, |i, j, k| tubes[i.min(j) * n + i.max(j)][k]))
}

pub fn weights<R: Rng + ?Sized>(rng: &mut R) -> Weights {
    let first: f64 = rng.random();
    Weights::new(first, 1.0 - first).expect("sums to 1")
}

pub fn mixing_weights<R: Rng + ?Sized>(s: usize, rng: &mut R) -> MixingWeights {
    let data = (0..s).flat_map(|_| distribution(s, rng)).collect();
    MixingWeights::new(s, data, Tolerance::default()).expect("rows are distributions")
}

pub fn permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        images.swap(i, j);
    }
    Permutation::new(images).expect("shuffle of identity")
}
