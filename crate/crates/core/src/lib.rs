//! Cubic stochastic matrices of type (1,2) and the square stochastic matrices
//! acting on them.
//!
//! A cubic matrix `P = (p_ijk)` is stored frontal-slice-major: `k` outermost,
//! then the row `i`, then the column `j`. All indices are 0-based; the usual
//! mathematical (1-based) entry `p_ijk` lives at `(i - 1, j - 1, k - 1)`.
//! Square matrices are column stochastic: entry `(i, j)` is the probability of
//! moving from state `j` to state `i`, and they act on column vectors from the
//! left.
//!
//! The crate is `no_std` and only needs `alloc`. Every value type is immutable
//! once constructed.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod actions;
pub mod algebra;
pub mod cubic;
pub mod decomp;
pub mod error;
pub mod markov;
pub mod matrix;
pub mod qso;
#[cfg(feature = "rand")]
pub mod random;
pub mod stochastic;
pub mod tolerance;

pub use actions::{act, act_on_marginals, act_on_slices, induced_chain, revert, ActionSide, ChainVariant};
pub use algebra::{dot_mul, is_symmetric12, multiply, power, star_mul, transpose12, weighted_mul, MulRule};
pub use cubic::{Cubic, StochasticType};
pub use decomp::{
    accompanying_first, accompanying_second, matricize_frontal, FiberAxis, FiberFamily, SliceAxis, SliceFamily,
    Unfolding,
};
pub use error::{Condition, Error, ErrorKind, Site, Violation};
pub use markov::{build_bivariate, build_general, BivariateModel, BlockModel, Iteration, IterateOptions, MixingWeights, StackedState};
pub use matrix::Matrix;
pub use qso::{apply_qso, apply_qso_symmetric, permute_frontal, Permutation};
pub use stochastic::{ConvexCombine, Cubic3Stochastic, CubicStochastic12, SimplexVector, StochasticMatrix, Weights};
pub use tolerance::Tolerance;

pub type Result<T, E = Error> = core::result::Result<T, E>;
