//! Naive summation oracles, written straight from the unit-matrix rules and
//! independent of the library's kernels.
#![allow(dead_code)]

use cubic_core::{Cubic, CubicStochastic12, Matrix, StochasticMatrix, Weights};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Σ_{k,r} a_ijk b_krs` from `(i,j,k)·(m,r,s) = δ_km (i,j,s)`.
pub fn dot(a: &CubicStochastic12, b: &CubicStochastic12) -> Cubic {
    let n = a.n();
    Cubic::from_fn(n, |i, j, s| {
        let mut acc = 0.0;
        for k in 0..n {
            for m in 0..n {
                for r in 0..n {
                    if k == m {
                        acc += a.get(i, j, k) * b.get(m, r, s);
                    }
                }
            }
        }
        acc
    })
}

/// `Σ_{r,s} a_ijr (λ₁ b_rsk + λ₂ b_srk)`, the weighted rule expanded over
/// unit matrices.
pub fn weighted(a: &CubicStochastic12, b: &CubicStochastic12, w: Weights) -> Cubic {
    let n = a.n();
    Cubic::from_fn(n, |i, j, k| {
        let mut acc = 0.0;
        for r in 0..n {
            for s in 0..n {
                acc += a.get(i, j, r) * (w.first() * b.get(r, s, k) + w.second() * b.get(s, r, k));
            }
        }
        acc
    })
}

pub fn star(a: &CubicStochastic12, b: &CubicStochastic12) -> Cubic {
    let n = a.n();
    Cubic::from_fn(n, |i, j, k| {
        let mut acc = 0.0;
        for r in 0..n {
            for s in 0..n {
                acc += 0.5 * (a.get(i, j, r) * b.get(r, s, k) + a.get(i, j, r) * b.get(s, r, k));
            }
        }
        acc
    })
}

/// `Σ_r a_ir p_rst`.
pub fn act_first(a: &StochasticMatrix, p: &CubicStochastic12) -> Cubic {
    let n = p.n();
    Cubic::from_fn(n, |i, s, t| (0..n).map(|r| a.get(i, r) * p.get(r, s, t)).sum())
}

/// `Σ_s a_is p_rst` placed at `(r, i, t)`.
pub fn act_second(a: &StochasticMatrix, p: &CubicStochastic12) -> Cubic {
    let n = p.n();
    Cubic::from_fn(n, |r, i, t| (0..n).map(|s| a.get(i, s) * p.get(r, s, t)).sum())
}

pub fn marginal_first(p: &Cubic) -> Matrix {
    let n = p.n();
    Matrix::from_fn(n, |i, k| (0..n).map(|j| p.get(i, j, k)).sum())
}

pub fn marginal_second(p: &Cubic) -> Matrix {
    let n = p.n();
    Matrix::from_fn(n, |j, k| (0..n).map(|i| p.get(i, j, k)).sum())
}

/// Plain triple-loop matrix product.
pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.n();
    Matrix::from_fn(n, |i, j| (0..n).map(|r| a.get(i, r) * b.get(r, j)).sum())
}

/// `diag(blocks…)`.
pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
    let n = blocks[0].n();
    Matrix::from_fn(n * blocks.len(), |r, c| if r / n == c / n { blocks[r / n].get(r % n, c % n) } else { 0.0 })
}

pub fn transpose12(p: &Cubic) -> Cubic {
    Cubic::from_fn(p.n(), |i, j, k| p.get(j, i, k))
}
