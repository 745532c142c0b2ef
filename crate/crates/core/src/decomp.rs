//! Slices, fibers, frontal matricization and accompanying matrices.
//!
//! Slice and fiber indices are 0-based here.

use alloc::vec::Vec;

use crate::cubic::Cubic;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::stochastic::{CubicStochastic12, StochasticMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SliceAxis {
    /// `P_h::`, entry `(j, k) = p_hjk`.
    Horizontal,
    /// `P_:h:`, entry `(i, k) = p_ihk`.
    Lateral,
    /// `P_::h`, entry `(i, j) = p_ijh`.
    Frontal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberAxis {
    /// `P_:jk`, indexed by `(j, k)`.
    Column,
    /// `P_i:k`, indexed by `(i, k)`.
    Row,
    /// `P_ij:`, indexed by `(i, j)`.
    Tube,
}

/// All `n` slices of a cubic matrix along one axis, in index order.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceFamily {
    pub axis: SliceAxis,
    pub slices: Vec<Matrix>,
}

/// All `n²` fibers along one axis, ordered lexicographically by their
/// fixed index pair.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberFamily {
    pub axis: FiberAxis,
    pub fibers: Vec<Vec<f64>>,
}

fn check_index(index: usize, n: usize) -> Result<(), Error> {
    if index < n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: index + 1, n })
    }
}

impl Cubic {
    pub fn slice(&self, axis: SliceAxis, h: usize) -> Result<Matrix, Error> {
        let n = self.n();
        check_index(h, n)?;
        Ok(match axis {
            SliceAxis::Horizontal => Matrix::from_fn(n, |j, k| self.get(h, j, k)),
            SliceAxis::Lateral => Matrix::from_fn(n, |i, k| self.get(i, h, k)),
            SliceAxis::Frontal => Matrix::new(n, self.frontal(h).to_vec())?,
        })
    }

    pub fn slices(&self, axis: SliceAxis) -> SliceFamily {
        let slices = (0..self.n()).map(|h| self.slice(axis, h).expect("index in range")).collect();
        SliceFamily { axis, slices }
    }

    /// The fiber obtained by fixing the index pair `(a, b)`; see [`FiberAxis`]
    /// for which two indices the pair names.
    pub fn fiber(&self, axis: FiberAxis, a: usize, b: usize) -> Result<Vec<f64>, Error> {
        let n = self.n();
        check_index(a, n)?;
        check_index(b, n)?;
        Ok(match axis {
            FiberAxis::Column => (0..n).map(|i| self.get(i, a, b)).collect(),
            FiberAxis::Row => (0..n).map(|j| self.get(a, j, b)).collect(),
            FiberAxis::Tube => (0..n).map(|k| self.get(a, b, k)).collect(),
        })
    }

    pub fn fibers(&self, axis: FiberAxis) -> FiberFamily {
        let n = self.n();
        let mut fibers = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                fibers.push(self.fiber(axis, a, b).expect("index in range"));
            }
        }
        FiberFamily { axis, fibers }
    }
}

impl SliceFamily {
    /// Reassemble a cubic grid from frontal slices.
    pub fn to_cubic(&self) -> Result<Cubic, Error> {
        let n = self.slices.len();
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if let Some(s) = self.slices.iter().find(|s| s.n() != n) {
            return Err(Error::NotCubical { expected: n, found: s.n() });
        }
        match self.axis {
            SliceAxis::Frontal => Ok(Cubic::from_matrices(n, &self.slices)),
            SliceAxis::Horizontal => Ok(Cubic::from_fn(n, |i, j, k| self.slices[i].get(j, k))),
            SliceAxis::Lateral => Ok(Cubic::from_fn(n, |i, j, k| self.slices[j].get(i, k))),
        }
    }
}

/// A rectangular `rows × cols` matrix, row-major; the frontal unfolding of a
/// cubic matrix has `rows = n` and `cols = n²`.
#[derive(Debug, Clone, PartialEq)]
pub struct Unfolding {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Unfolding {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension);
        }
        if data.len() != rows * cols {
            return Err(Error::Length { expected: rows * cols, found: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Block `h` (columns `h·n .. (h+1)·n`) as a square matrix.
    pub fn block(&self, h: usize) -> Result<Matrix, Error> {
        let n = self.rows;
        if self.cols != n * n {
            return Err(Error::NotCubical { expected: n * n, found: self.cols });
        }
        check_index(h, n)?;
        Ok(Matrix::from_fn(n, |i, j| self.get(i, h * n + j)))
    }

    /// Inverse of [`matricize_frontal`]: columns `h·n .. (h+1)·n` become
    /// frontal slice `h`.
    pub fn fold(&self) -> Result<Cubic, Error> {
        let n = self.rows;
        if self.cols != n * n {
            return Err(Error::NotCubical { expected: n * n, found: self.cols });
        }
        Ok(Cubic::from_fn(n, |i, j, k| self.get(i, k * n + j)))
    }
}

/// `(P_::1 | P_::2 | … | P_::n)`: entry `(i, k·n + j) = p_ijk`.
pub fn matricize_frontal(p: &Cubic) -> Unfolding {
    let n = p.n();
    let mut data = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                data.push(p.get(i, j, k));
            }
        }
    }
    Unfolding { rows: n, cols: n * n, data }
}

/// `P₁ = (p_{i+k})`, `p_{i+k} = Σ_j p_ijk`.
pub fn accompanying_first(p: &CubicStochastic12) -> StochasticMatrix {
    let g = p.as_cubic();
    let n = g.n();
    StochasticMatrix::from_matrix_unchecked(Matrix::from_fn(n, |i, k| (0..n).map(|j| g.get(i, j, k)).sum()))
}

/// `P₂ = (p_{+jk})`, `p_{+jk} = Σ_i p_ijk`.
pub fn accompanying_second(p: &CubicStochastic12) -> StochasticMatrix {
    let g = p.as_cubic();
    let n = g.n();
    StochasticMatrix::from_matrix_unchecked(Matrix::from_fn(n, |j, k| (0..n).map(|i| g.get(i, j, k)).sum()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::Tolerance;
    use alloc::vec;

    fn worked() -> CubicStochastic12 {
        CubicStochastic12::from_frontal_slices(&[[[0.5, 0.1], [0.2, 0.2]], [[0.25, 0.25], [0.25, 0.25]]], Tolerance::default())
            .unwrap()
    }

    #[test]
    fn slice_conventions() {
        let p = Cubic::from_fn(3, |i, j, k| (100 * i + 10 * j + k) as f64);
        assert_eq!(p.slice(SliceAxis::Frontal, 2).unwrap().get(1, 0), 102.0);
        assert_eq!(p.slice(SliceAxis::Horizontal, 2).unwrap().get(1, 0), 210.0);
        assert_eq!(p.slice(SliceAxis::Lateral, 2).unwrap().get(1, 0), 120.0);
        assert_eq!(p.slice(SliceAxis::Frontal, 3), Err(Error::IndexOutOfRange { index: 4, n: 3 }));
        for axis in [SliceAxis::Frontal, SliceAxis::Horizontal, SliceAxis::Lateral] {
            assert_eq!(p.slices(axis).to_cubic().unwrap(), p);
        }
    }

    #[test]
    fn fiber_conventions() {
        let p = Cubic::from_fn(2, |i, j, k| (100 * i + 10 * j + k) as f64);
        assert_eq!(p.fiber(FiberAxis::Column, 1, 0).unwrap(), vec![10.0, 110.0]);
        assert_eq!(p.fiber(FiberAxis::Row, 1, 0).unwrap(), vec![100.0, 110.0]);
        assert_eq!(p.fiber(FiberAxis::Tube, 1, 0).unwrap(), vec![100.0, 101.0]);
        assert!(p.fiber(FiberAxis::Tube, 0, 2).is_err());
        assert_eq!(p.fibers(FiberAxis::Tube).fibers.len(), 4);
    }

    #[test]
    fn uniform_slices_and_tubes() {
        let u = CubicStochastic12::uniform(3);
        let s = u.as_cubic().slice(SliceAxis::Frontal, 1).unwrap();
        assert!(s.as_slice().iter().all(|&v| v == 1.0 / 9.0));
        assert_eq!(u.as_cubic().fiber(FiberAxis::Tube, 2, 0).unwrap(), vec![1.0 / 9.0; 3]);
    }

    #[test]
    fn matricize_layout() {
        assert_eq!(matricize_frontal(&Cubic::new(1, vec![1.0]).unwrap()).row(0), &[1.0]);
        let u = matricize_frontal(CubicStochastic12::uniform(2).as_cubic());
        assert_eq!((u.rows(), u.cols()), (2, 4));
        assert!(u.row(0).iter().chain(u.row(1)).all(|&v| v == 0.25));
        let p = worked();
        let m = matricize_frontal(p.as_cubic());
        assert_eq!(m.row(0), &[0.5, 0.1, 0.25, 0.25]);
        assert_eq!(m.row(1), &[0.2, 0.2, 0.25, 0.25]);
        assert_eq!(m.fold().unwrap(), *p.as_cubic());
        assert_eq!(m.block(0).unwrap(), p.as_cubic().slice(SliceAxis::Frontal, 0).unwrap());
        assert!(Unfolding::new(2, 3, vec![0.0; 6]).unwrap().fold().is_err());
    }

    #[test]
    fn worked_accompanying() {
        let p = worked();
        let first = accompanying_first(&p);
        let second = accompanying_second(&p);
        let expect1 = Matrix::from_rows(&[[0.6, 0.5], [0.4, 0.5]]).unwrap();
        let expect2 = Matrix::from_rows(&[[0.7, 0.5], [0.3, 0.5]]).unwrap();
        assert!(first.as_matrix().max_abs_diff(&expect1) < 1e-15);
        assert!(second.as_matrix().max_abs_diff(&expect2) < 1e-15);
        let u = accompanying_first(&CubicStochastic12::uniform(4));
        assert!(u.as_matrix().as_slice().iter().all(|&v| (v - 0.25).abs() < 1e-15));
    }
}
