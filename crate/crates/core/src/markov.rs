//! Block (multivariate) Markov models
//!
//! ```text
//! X⁽ʲ⁾_{t+1} = Σ_k λ_jk · P⁽ʲᵏ⁾ · X⁽ᵏ⁾_t
//! ```
//!
//! and the bivariate model of a type-(1,2) cubic matrix, whose first block
//! row uses the first accompanying matrix and second block row the second.
//! The assembled matrix `Q` need not be column stochastic.

use alloc::vec;
use alloc::vec::Vec;

use crate::decomp::{accompanying_first, accompanying_second};
use crate::error::{ensure_same, Error};
use crate::matrix::Matrix;
use crate::stochastic::{validate_simplex, CubicStochastic12, SimplexVector, StochasticMatrix};
use crate::tolerance::Tolerance;

/// `s×s` nonnegative weights `λ_jk` whose rows each sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingWeights {
    s: usize,
    data: Vec<f64>,
}

impl MixingWeights {
    /// Row-major `s×s` weights.
    pub fn new(s: usize, data: Vec<f64>, tol: Tolerance) -> Result<Self, Error> {
        if s == 0 {
            return Err(Error::ZeroDimension);
        }
        if data.len() != s * s {
            return Err(Error::Length { expected: s * s, found: data.len() });
        }
        let mut data = data;
        for row in 0..s {
            for col in 0..s {
                let value = data[row * s + col];
                if !value.is_finite() || !tol.admits_entry(value) {
                    return Err(Error::NegativeMixing { row: row + 1, col: col + 1, value });
                }
            }
            let sum: f64 = data[row * s..(row + 1) * s].iter().sum();
            if !tol.admits_sum(sum) {
                return Err(Error::MixingRowSum { row: row + 1, sum });
            }
        }
        for v in &mut data {
            *v = v.max(0.0);
        }
        Ok(Self { s, data })
    }

    /// `[[λ₁₁, λ₁₂], [λ₂₁, λ₂₂]]`.
    pub fn bivariate(l11: f64, l12: f64, l21: f64, l22: f64, tol: Tolerance) -> Result<Self, Error> {
        Self::new(2, vec![l11, l12, l21, l22], tol)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.data[j * self.s + k]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

/// The block model: blocks `P⁽ʲᵏ⁾`, weights `λ_jk` and the assembled
/// `sn×sn` matrix with block `(j, k)` equal to `λ_jk·P⁽ʲᵏ⁾`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockModel {
    n: usize,
    blocks: Vec<StochasticMatrix>,
    weights: MixingWeights,
    assembled: Matrix,
}

/// The `s = 2` case built from a cubic matrix.
pub type BivariateModel = BlockModel;

/// Row-major `s×s` grid of blocks mixed by `weights`.
pub fn build_general(blocks: Vec<StochasticMatrix>, weights: &MixingWeights) -> Result<BlockModel, Error> {
    let s = weights.s();
    if blocks.len() != s * s {
        return Err(Error::Length { expected: s * s, found: blocks.len() });
    }
    let n = blocks[0].n();
    for b in &blocks {
        ensure_same(n, b.n())?;
    }
    let size = s * n;
    let assembled = Matrix::from_fn(size, |row, col| {
        let (j, k) = (row / n, col / n);
        weights.get(j, k) * blocks[j * s + k].get(row % n, col % n)
    });
    Ok(BlockModel { n, blocks, weights: weights.clone(), assembled })
}

/// `P⁽¹¹⁾ = P⁽¹²⁾ = P₁` and `P⁽²¹⁾ = P⁽²²⁾ = P₂`.
pub fn build_bivariate(p: &CubicStochastic12, lambda: &MixingWeights) -> Result<BivariateModel, Error> {
    ensure_same(2, lambda.s())?;
    let first = accompanying_first(p);
    let second = accompanying_second(p);
    build_general(vec![first.clone(), first, second.clone(), second], lambda)
}

impl BlockModel {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.weights.s()
    }

    /// Block `P⁽ʲᵏ⁾` (0-based).
    pub fn block(&self, j: usize, k: usize) -> &StochasticMatrix {
        &self.blocks[j * self.s() + k]
    }

    pub fn blocks(&self) -> &[StochasticMatrix] {
        &self.blocks
    }

    pub fn weights(&self) -> &MixingWeights {
        &self.weights
    }

    pub fn assembled(&self) -> &Matrix {
        &self.assembled
    }

    /// One transition of every part.
    pub fn step(&self, x: &StackedState) -> Result<StackedState, Error> {
        let s = self.s();
        ensure_same(s, x.parts.len())?;
        ensure_same(self.n, x.n())?;
        let mut parts = Vec::with_capacity(s);
        for j in 0..s {
            let mut next = vec![0.0; self.n];
            for k in 0..s {
                let w = self.weights.get(j, k);
                if w == 0.0 {
                    continue;
                }
                let image = self.block(j, k).as_matrix().mul_vec(x.parts[k].as_slice())?;
                for (acc, v) in next.iter_mut().zip(image) {
                    *acc += w * v;
                }
            }
            parts.push(SimplexVector::from_vec_unchecked(next));
        }
        Ok(StackedState { parts })
    }

    /// Steps until the L1 distance between successive stacked states is at
    /// most `options.tol`, or `options.max_steps` steps were taken.
    pub fn iterate(&self, x0: &StackedState, options: IterateOptions) -> Result<Iteration, Error> {
        if options.max_steps == 0 || options.tol.is_nan() || options.tol <= 0.0 {
            return Err(Error::IterationParameters { max_steps: options.max_steps, tol: options.tol });
        }
        let mut state = x0.clone();
        for steps in 1..=options.max_steps {
            let next = self.step(&state)?;
            let distance = next.l1_distance(&state);
            state = next;
            if distance <= options.tol {
                return Ok(Iteration { state, steps, converged: true });
            }
        }
        Ok(Iteration { state, steps: options.max_steps, converged: false })
    }
}

/// `s` simplex vectors `X⁽¹⁾ … X⁽ˢ⁾`, kept separately normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct StackedState {
    parts: Vec<SimplexVector>,
}

impl StackedState {
    pub fn new(parts: Vec<SimplexVector>) -> Result<Self, Error> {
        let first = parts.first().ok_or(Error::ZeroDimension)?;
        let n = first.n();
        for p in &parts {
            ensure_same(n, p.n())?;
        }
        Ok(Self { parts })
    }

    pub fn from_vecs(parts: Vec<Vec<f64>>, tol: Tolerance) -> Result<Self, Error> {
        let parts = parts.into_iter().map(|p| SimplexVector::new(p, tol)).collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }

    pub fn n(&self) -> usize {
        self.parts[0].n()
    }

    pub fn parts(&self) -> &[SimplexVector] {
        &self.parts
    }

    /// The stacked `sn` vector.
    pub fn flatten(&self) -> Vec<f64> {
        self.parts.iter().flat_map(|p| p.as_slice().iter().copied()).collect()
    }

    pub fn l1_distance(&self, other: &StackedState) -> f64 {
        self.flatten().iter().zip(other.flatten()).map(|(a, b)| (a - b).abs()).sum()
    }

    /// Re-checks every part against the simplex condition.
    pub fn validate(&self, tol: Tolerance) -> Result<(), Error> {
        for p in &self.parts {
            validate_simplex(p.as_slice(), tol)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterateOptions {
    pub max_steps: usize,
    pub tol: f64,
}

impl Default for IterateOptions {
    fn default() -> Self {
        Self { max_steps: 10_000, tol: 1e-10 }
    }
}

/// Result of [`BlockModel::iterate`]. Non-convergence is reported here, not
/// as an error.
#[derive(Debug, Clone, PartialEq)]
pub struct Iteration {
    pub state: StackedState,
    pub steps: usize,
    pub converged: bool,
}
