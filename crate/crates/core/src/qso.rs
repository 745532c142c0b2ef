//! Quadratic stochastic operators `V(x)_k = Σ_{i,j} p_ijk x_i x_j` and the
//! permutation action on frontal slices of 3-stochastic matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::cubic::Cubic;
use crate::error::{ensure_same, Error};
use crate::stochastic::{Cubic3Stochastic, SimplexVector};
use crate::tolerance::Tolerance;

/// A bijection of `{0, …, n-1}`, stored as its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[k] = σ(k)`, 0-based.
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        if images.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &image in &images {
            if image >= n || seen[image] {
                return Err(Error::NotPermutation { image });
            }
            seen[image] = true;
        }
        Ok(Self { images })
    }

    /// One-line notation `σ(1) … σ(n)` with 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self, Error> {
        let zero_based = images
            .iter()
            .map(|&i| i.checked_sub(1).ok_or(Error::NotPermutation { image: 0 }))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(zero_based)
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`, i.e. `k ↦ self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, Error> {
        ensure_same(self.n(), other.n())?;
        Ok(Self { images: other.images.iter().map(|&k| self.images[k]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (k, &image) in self.images.iter().enumerate() {
            images[image] = k;
        }
        Self { images }
    }
}

/// `V(x)_k = Σ_{i,j} p_ijk x_i x_j`.
///
/// Does not require `p_ijk = p_jik`; see [`apply_qso_symmetric`].
pub fn apply_qso(p: &Cubic3Stochastic, x: &SimplexVector) -> Result<SimplexVector, Error> {
    ensure_same(p.n(), x.n())?;
    let n = p.n();
    let x = x.as_slice();
    let g = p.as_cubic();
    let mut out = vec![0.0; n];
    for i in 0..n {
        for j in 0..n {
            let w = x[i] * x[j];
            if w == 0.0 {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += g.get(i, j, k) * w;
            }
        }
    }
    Ok(SimplexVector::from_vec_unchecked(out))
}

/// [`apply_qso`] after checking `|p_ijk − p_jik| ≤ eps`.
pub fn apply_qso_symmetric(p: &Cubic3Stochastic, x: &SimplexVector, tol: Tolerance) -> Result<SimplexVector, Error> {
    p.as_cubic().check_symmetric12(tol)?;
    apply_qso(p, x)
}

/// `(σP)_ijk = p_{i,j,σ(k)}`.
///
/// With this orientation the map is a right action of `Sₙ`:
/// `permute_frontal(σ ∘ τ, P) = permute_frontal(τ, permute_frontal(σ, P))`.
pub fn permute_frontal(sigma: &Permutation, p: &Cubic3Stochastic) -> Result<Cubic3Stochastic, Error> {
    ensure_same(sigma.n(), p.n())?;
    let g = p.as_cubic();
    Ok(Cubic3Stochastic::from_cubic_unchecked(Cubic::from_fn(g.n(), |i, j, k| g.get(i, j, sigma.apply(k)))))
}

impl Cubic3Stochastic {
    pub fn is_symmetric12(&self, tol: Tolerance) -> bool {
        self.as_cubic().check_symmetric12(tol).is_ok()
    }
}
