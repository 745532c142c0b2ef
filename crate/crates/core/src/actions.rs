//! Actions of `NS(n, ℝ)` on `CS₍₁,₂₎(n, ℝ)` through the first (paternal) or
//! second (maternal) index.
//!
//! Elementwise:
//!
//! ```text
//! (A ⊛₁ P)_ist = Σ_r a_ir p_rst
//! (A ⊛₂ P)_rit = Σ_s a_is p_rst
//! ```
//!
//! On frontal slices this reads `(A ⊛₁ P)_::k = A·P_::k` and
//! `(A ⊛₂ P)_::k = P_::k·Aᵀ`. The second form is the transpose of
//! `A·(P_::k)ᵀ`, which is frontal slice `k` of `(A ⊛₂ P)^T(1,2)`.

use crate::decomp::{accompanying_first, accompanying_second, SliceAxis, SliceFamily};
use crate::error::{ensure_same, Error};
use crate::markov::{build_bivariate, BlockModel, MixingWeights};
use crate::cubic::Cubic;
use crate::matrix::Matrix;
use crate::stochastic::{CubicStochastic12, StochasticMatrix};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionSide {
    /// `⊛₁`, acts on the first index.
    First,
    /// `⊛₂`, acts on the second index.
    Second,
}

/// Which mutated bivariate chain to build from an action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainVariant {
    /// `A ⊛₁ P`, giving `Q₁ = diag(A, I)·Q`.
    Q1,
    /// `A ⊛₂ P`, giving `Q₂ = diag(I, A)·Q`.
    Q2,
    /// `A ⊛₁ (A ⊛₂ P)`, giving `Q₃ = diag(A, A)·Q`.
    Q3,
}

/// Frontal slices of `A ⊛ P`, computed as `n` matrix products.
pub fn act_on_slices(a: &StochasticMatrix, p: &CubicStochastic12, side: ActionSide) -> Result<SliceFamily, Error> {
    ensure_same(a.n(), p.n())?;
    let n = p.n();
    let a = a.as_matrix();
    let at = a.transpose();
    let slices = (0..n)
        .map(|k| {
            let s = p.as_cubic().slice(SliceAxis::Frontal, k).expect("index in range");
            match side {
                ActionSide::First => a.matmul_unchecked(&s),
                ActionSide::Second => s.matmul_unchecked(&at),
            }
        })
        .collect();
    Ok(SliceFamily { axis: SliceAxis::Frontal, slices })
}

pub fn act(a: &StochasticMatrix, p: &CubicStochastic12, side: ActionSide) -> Result<CubicStochastic12, Error> {
    let family = act_on_slices(a, p, side)?;
    Ok(CubicStochastic12::from_cubic_unchecked(Cubic::from_matrices(p.n(), &family.slices)))
}

/// `(first, second)` accompanying matrices of `A ⊛ P`: `(A·P₁, P₂)` for
/// [`ActionSide::First`], `(P₁, A·P₂)` for [`ActionSide::Second`].
pub fn act_on_marginals(
    a: &StochasticMatrix,
    p: &CubicStochastic12,
    side: ActionSide,
) -> Result<(StochasticMatrix, StochasticMatrix), Error> {
    ensure_same(a.n(), p.n())?;
    let first = accompanying_first(p);
    let second = accompanying_second(p);
    Ok(match side {
        ActionSide::First => (a.product(&first)?, second),
        ActionSide::Second => (first, a.product(&second)?),
    })
}

/// Undo `A ⊛ P` given an inverse of `A` that is itself stochastic (only
/// permutation matrices qualify). `inverse·a` must equal the identity to
/// within `tol`.
pub fn revert(
    a: &StochasticMatrix,
    inverse: &StochasticMatrix,
    acted: &CubicStochastic12,
    side: ActionSide,
    tol: Tolerance,
) -> Result<CubicStochastic12, Error> {
    ensure_same(a.n(), inverse.n())?;
    let residual = inverse.as_matrix().matmul(a.as_matrix())?.max_abs_diff(&Matrix::identity(a.n()));
    if residual.is_nan() || residual > tol.eps() {
        return Err(Error::NotInverse { residual });
    }
    act(inverse, acted, side)
}

/// Bivariate model of the mutated matrix selected by `which`.
pub fn induced_chain(
    a: &StochasticMatrix,
    p: &CubicStochastic12,
    lambda: &MixingWeights,
    which: ChainVariant,
) -> Result<BlockModel, Error> {
    let mutated = match which {
        ChainVariant::Q1 => act(a, p, ActionSide::First)?,
        ChainVariant::Q2 => act(a, p, ActionSide::Second)?,
        ChainVariant::Q3 => act(a, &act(a, p, ActionSide::Second)?, ActionSide::First)?,
    };
    build_bivariate(&mutated, lambda)
}

impl CubicStochastic12 {
    pub fn acted_on_by(&self, a: &StochasticMatrix, side: ActionSide) -> Result<CubicStochastic12, Error> {
        act(a, self, side)
    }
}
