use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use crate::error::{ensure_same, Error};

/// Dense square matrix, row-major, no stochasticity guarantee.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if data.len() != n * n {
            return Err(Error::Length { expected: n * n, found: data.len() });
        }
        Ok(Self { n, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, Error> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotCubical { expected: n, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Self::new(n, data)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn column_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.n];
        for i in 0..self.n {
            for (s, v) in sums.iter_mut().zip(self.row(i)) {
                *s += v;
            }
        }
        sums
    }

    pub fn total(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self { n: self.n, data: self.data.iter().map(|v| v * factor).collect() }
    }

    /// Ordinary matrix product `self · rhs`.
    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        ensure_same(self.n, rhs.n)?;
        Ok(self.matmul_unchecked(rhs))
    }

    pub(crate) fn matmul_unchecked(&self, rhs: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            let row = &mut out[i * n..(i + 1) * n];
            for (r, &a) in self.row(i).iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                for (o, &b) in row.iter_mut().zip(rhs.row(r)) {
                    *o += a * b;
                }
            }
        }
        Matrix { n, data: out }
    }

    /// `self · x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>, Error> {
        ensure_same(self.n, x.len())?;
        Ok((0..self.n).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect())
    }

    /// Largest elementwise absolute difference; `f64::INFINITY` on size mismatch.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        max_abs_diff(&self.data, &other.data)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

pub(crate) fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
