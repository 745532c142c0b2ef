//! Products on `CS₍₁,₂₎(n, ℝ)`.
//!
//! All three rules share one kernel. For weights `(λ₁, λ₂)` the right factor
//! `B` is reduced to the column-stochastic mixing matrix
//! `C = λ₁·B₁ + λ₂·B₂` of its accompanying matrices, and
//!
//! ```text
//! (A ⋆_(λ₁,λ₂) B)_ijk = Σ_r a_ijr · c_rk
//! ```
//!
//! so frontal slice `k` of the product is `Σ_r c_rk · A_::r`. `C` costs
//! O(n³), the product O(n⁴).

use crate::cubic::Cubic;
use crate::decomp::{accompanying_first, accompanying_second};
use crate::error::{ensure_same, Error};
use crate::matrix::Matrix;
use crate::stochastic::{CubicStochastic12, Weights};
use crate::tolerance::Tolerance;

/// Multiplication rule on type-(1,2) cubic matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MulRule {
    /// The `·` product, same as `Weighted(1, 0)`.
    Dot,
    /// Equally weighted `⋆`, same as `Weighted(½, ½)`.
    Star,
    Weighted(Weights),
}

impl MulRule {
    pub fn weights(self) -> Weights {
        match self {
            MulRule::Dot => Weights::DOT,
            MulRule::Star => Weights::STAR,
            MulRule::Weighted(w) => w,
        }
    }
}

/// `λ₁·B₁ + λ₂·B₂`; column `k` holds `λ₁ b_{r+k} + λ₂ b_{+rk}` over `r`.
pub fn mixing_matrix(b: &CubicStochastic12, w: Weights) -> Matrix {
    let first = accompanying_first(b);
    let second = accompanying_second(b);
    let (l1, l2) = (w.first(), w.second());
    Matrix::from_fn(b.n(), |r, k| l1 * first.get(r, k) + l2 * second.get(r, k))
}

fn contract(a: &Cubic, c: &Matrix) -> Cubic {
    let n = a.n();
    let m = n * n;
    let mut out = Cubic::from_fn(n, |_, _, _| 0.0);
    let data = out.data_mut();
    for k in 0..n {
        let dst = &mut data[k * m..(k + 1) * m];
        for r in 0..n {
            let weight = c.get(r, k);
            if weight == 0.0 {
                continue;
            }
            for (o, &v) in dst.iter_mut().zip(a.frontal(r)) {
                *o += v * weight;
            }
        }
    }
    out
}

pub fn multiply(a: &CubicStochastic12, b: &CubicStochastic12, rule: MulRule) -> Result<CubicStochastic12, Error> {
    ensure_same(a.n(), b.n())?;
    let c = mixing_matrix(b, rule.weights());
    Ok(CubicStochastic12::from_cubic_unchecked(contract(a.as_cubic(), &c)))
}

/// `(A · B)_ijs = Σ_k a_ijk b_{k+s}`.
pub fn dot_mul(a: &CubicStochastic12, b: &CubicStochastic12) -> Result<CubicStochastic12, Error> {
    multiply(a, b, MulRule::Dot)
}

/// `(A ⋆ B)_ijk = ½ Σ_r a_ijr (b_{r+k} + b_{+rk})`.
pub fn star_mul(a: &CubicStochastic12, b: &CubicStochastic12) -> Result<CubicStochastic12, Error> {
    multiply(a, b, MulRule::Star)
}

/// `(A ⋆_(λ₁,λ₂) B)_ijk = Σ_r a_ijr (λ₁ b_{r+k} + λ₂ b_{+rk})`.
pub fn weighted_mul(a: &CubicStochastic12, b: &CubicStochastic12, w: Weights) -> Result<CubicStochastic12, Error> {
    multiply(a, b, MulRule::Weighted(w))
}

/// `q_ijk = p_jik`: every frontal slice transposed.
pub fn transpose12(p: &CubicStochastic12) -> CubicStochastic12 {
    let g = p.as_cubic();
    CubicStochastic12::from_cubic_unchecked(Cubic::from_fn(g.n(), |i, j, k| g.get(j, i, k)))
}

/// `max |p_ijk − p_jik| ≤ eps`.
pub fn is_symmetric12(p: &CubicStochastic12, tol: Tolerance) -> bool {
    p.as_cubic().check_symmetric12(tol).is_ok()
}

/// Left-associated `m`-fold product `(…((P∘P)∘P)…)∘P`, computed by
/// repeated multiplication.
pub fn power(p: &CubicStochastic12, m: usize, rule: MulRule) -> Result<CubicStochastic12, Error> {
    if m == 0 {
        return Err(Error::ZeroPower);
    }
    let c = mixing_matrix(p, rule.weights());
    let mut acc = p.as_cubic().clone();
    for _ in 1..m {
        acc = contract(&acc, &c);
    }
    Ok(CubicStochastic12::from_cubic_unchecked(acc))
}

impl CubicStochastic12 {
    pub fn mul(&self, rhs: &CubicStochastic12, rule: MulRule) -> Result<CubicStochastic12, Error> {
        multiply(self, rhs, rule)
    }

    pub fn transpose12(&self) -> CubicStochastic12 {
        transpose12(self)
    }

    pub fn is_symmetric12(&self, tol: Tolerance) -> bool {
        is_symmetric12(self, tol)
    }

    /// `½ (P + P^T(1,2))`, the nearest (1,2)-symmetric matrix.
    pub fn symmetrized(&self) -> CubicStochastic12 {
        let t = transpose12(self);
        CubicStochastic12::from_cubic_unchecked(self.as_cubic().zip_with(t.as_cubic(), |a, b| 0.5 * (a + b)))
    }
}
