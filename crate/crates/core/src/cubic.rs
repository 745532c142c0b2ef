//! Raw `n×n×n` grids and their stochasticity validators.

use alloc::vec::Vec;
use core::ops::Index;

use crate::error::{Condition, Error, Site, Violation};
use crate::matrix::{max_abs_diff, Matrix};
use crate::tolerance::Tolerance;

/// Which index set of a cubic matrix must sum to one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StochasticType {
    /// `Σ_{i,j} p_ijk = 1` for every `k`.
    Type12,
    /// `Σ_{j,k} p_ijk = 1` for every `i`.
    Type23,
    /// `Σ_{i,k} p_ijk = 1` for every `j`.
    Type13,
    /// `Σ_k p_ijk = 1` for every `(i, j)`.
    Three,
}

impl StochasticType {
    pub fn condition(self) -> Condition {
        match self {
            StochasticType::Type12 => Condition::Type12,
            StochasticType::Type23 => Condition::Type23,
            StochasticType::Type13 => Condition::Type13,
            StochasticType::Three => Condition::ThreeStochastic,
        }
    }
}

/// An `n×n×n` grid of reals stored frontal-slice-major (`k`, then `i`, then `j`).
#[derive(Debug, Clone, PartialEq)]
pub struct Cubic {
    n: usize,
    data: Vec<f64>,
}

impl Cubic {
    /// Build from a flat frontal-major buffer of length `n³`.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let expected = n * n * n;
        if data.len() != expected {
            return Err(Error::Length { expected, found: data.len() });
        }
        Ok(Self { n, data })
    }

    /// Build from frontal slices, `slices[k][i][j] = p_ijk`.
    pub fn from_frontal_slices<S, R>(slices: &[S]) -> Result<Self, Error>
    where
        S: AsRef<[R]>,
        R: AsRef<[f64]>,
    {
        let n = slices.len();
        let mut data = Vec::with_capacity(n * n * n);
        for slice in slices {
            let rows = slice.as_ref();
            if rows.len() != n {
                return Err(Error::NotCubical { expected: n, found: rows.len() });
            }
            for row in rows {
                let row = row.as_ref();
                if row.len() != n {
                    return Err(Error::NotCubical { expected: n, found: row.len() });
                }
                data.extend_from_slice(row);
            }
        }
        Self::new(n, data)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    data.push(f(i, j, k));
                }
            }
        }
        Self { n, data }
    }

    pub(crate) fn from_matrices(n: usize, slices: &[Matrix]) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for s in slices {
            data.extend_from_slice(s.as_slice());
        }
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[(k * self.n + i) * self.n + j]
    }

    /// Flat frontal-major view.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    /// Entries of frontal slice `k` as a row-major `n×n` block.
    pub(crate) fn frontal(&self, k: usize) -> &[f64] {
        let m = self.n * self.n;
        &self.data[k * m..(k + 1) * m]
    }

    pub fn max_abs_diff(&self, other: &Cubic) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        max_abs_diff(&self.data, &other.data)
    }

    pub(crate) fn zip_with(&self, other: &Cubic, f: impl Fn(f64, f64) -> f64) -> Self {
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect() }
    }

    pub(crate) fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Checks nonnegativity and the sum condition of `kind`; reports the
    /// first failure. Entries are checked before sums.
    pub fn validate(&self, kind: StochasticType, tol: Tolerance) -> Result<(), Violation> {
        let condition = kind.condition();
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    tol.check_entry(condition, Site::Entry3(i, j, k), self.get(i, j, k))?;
                }
            }
        }
        for (site, sum) in self.index_sums(kind) {
            tol.check_sum(condition, site, sum)?;
        }
        Ok(())
    }

    pub fn is_type(&self, kind: StochasticType, tol: Tolerance) -> bool {
        self.validate(kind, tol).is_ok()
    }

    /// The sums constrained by `kind`, paired with the index set they cover.
    pub fn index_sums(&self, kind: StochasticType) -> Vec<(Site, f64)> {
        let n = self.n;
        match kind {
            StochasticType::Type12 => (0..n).map(|k| (Site::Frontal(k), self.frontal(k).iter().sum())).collect(),
            StochasticType::Type23 => {
                (0..n)
                    .map(|i| {
                        let s = (0..n).flat_map(|k| (0..n).map(move |j| (j, k))).map(|(j, k)| self.get(i, j, k)).sum();
                        (Site::Horizontal(i), s)
                    })
                    .collect()
            }
            StochasticType::Type13 => {
                (0..n)
                    .map(|j| {
                        let s = (0..n).flat_map(|k| (0..n).map(move |i| (i, k))).map(|(i, k)| self.get(i, j, k)).sum();
                        (Site::Lateral(j), s)
                    })
                    .collect()
            }
            StochasticType::Three => {
                let mut out = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let s = (0..n).map(|k| self.get(i, j, k)).sum();
                        out.push((Site::Tube(i, j), s));
                    }
                }
                out
            }
        }
    }

    /// First `(i, j, k)` with `|p_ijk - p_jik| > tol.eps()`.
    pub fn check_symmetric12(&self, tol: Tolerance) -> Result<(), Violation> {
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                for j in (i + 1)..n {
                    let diff = (self.get(i, j, k) - self.get(j, i, k)).abs();
                    if diff > tol.eps() || diff.is_nan() {
                        return Err(Violation::Asymmetric {
                            condition: Condition::Symmetric12,
                            site: Site::Entry3(i, j, k),
                            diff,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

impl Index<(usize, usize, usize)> for Cubic {
    type Output = f64;

    fn index(&self, (i, j, k): (usize, usize, usize)) -> &f64 {
        &self.data[(k * self.n + i) * self.n + j]
    }
}
