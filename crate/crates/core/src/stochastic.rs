//! Validated stochastic value types.
//!
//! Constructors admit entries in `(-eps, 0)` by clamping them to zero, so the
//! nonnegativity invariant holds literally once a value exists. Unit sums are
//! only checked to within `eps`; no renormalization is performed.

use alloc::vec;
use alloc::vec::Vec;

use crate::cubic::{Cubic, StochasticType};
use crate::error::{ensure_same, Condition, Error, Site, Violation};
use crate::matrix::Matrix;
use crate::tolerance::{clamp_nonnegative, Tolerance};

/// Checks that `m` is nonnegative with unit column sums.
pub fn validate_column_stochastic(m: &Matrix, tol: Tolerance) -> Result<(), Violation> {
    let condition = Condition::ColumnStochastic;
    let n = m.n();
    for i in 0..n {
        for j in 0..n {
            tol.check_entry(condition, Site::Entry2(i, j), m.get(i, j))?;
        }
    }
    for (j, s) in m.column_sums().into_iter().enumerate() {
        tol.check_sum(condition, Site::Column(j), s)?;
    }
    Ok(())
}

/// Checks that `x` lies on the probability simplex.
pub fn validate_simplex(x: &[f64], tol: Tolerance) -> Result<(), Violation> {
    let condition = Condition::Simplex;
    for (i, &v) in x.iter().enumerate() {
        tol.check_entry(condition, Site::Entry1(i), v)?;
    }
    tol.check_sum(condition, Site::Whole, x.iter().sum())
}

/// Element of `NS(n, ℝ)`: nonnegative, every column sums to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticMatrix(Matrix);

impl StochasticMatrix {
    pub fn new(m: Matrix, tol: Tolerance) -> Result<Self, Error> {
        validate_column_stochastic(&m, tol)?;
        let n = m.n();
        let mut data = m.into_vec();
        clamp_nonnegative(&mut data);
        Ok(Self(Matrix::new(n, data)?))
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R], tol: Tolerance) -> Result<Self, Error> {
        Self::new(Matrix::from_rows(rows)?, tol)
    }

    pub fn identity(n: usize) -> Self {
        Self(Matrix::identity(n))
    }

    /// Every entry `1/n`.
    pub fn uniform(n: usize) -> Self {
        Self(Matrix::from_fn(n, |_, _| 1.0 / n as f64))
    }

    pub(crate) fn from_matrix_unchecked(m: Matrix) -> Self {
        Self(m)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Ordinary matrix product; `NS(n, ℝ)` is closed under it.
    pub fn product(&self, rhs: &StochasticMatrix) -> Result<StochasticMatrix, Error> {
        Ok(Self(self.0.matmul(&rhs.0)?))
    }
}

/// Element of `CS₍₁,₂₎(n, ℝ)`: nonnegative, every frontal slice sums to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicStochastic12(Cubic);

impl CubicStochastic12 {
    pub fn new(grid: Cubic, tol: Tolerance) -> Result<Self, Error> {
        admit(grid, StochasticType::Type12, tol).map(Self)
    }

    /// `slices[k][i][j] = p_ijk`.
    pub fn from_frontal_slices<S, R>(slices: &[S], tol: Tolerance) -> Result<Self, Error>
    where
        S: AsRef<[R]>,
        R: AsRef<[f64]>,
    {
        Self::new(Cubic::from_frontal_slices(slices)?, tol)
    }

    /// Every entry `1/n²`.
    pub fn uniform(n: usize) -> Self {
        let v = 1.0 / (n * n) as f64;
        Self(Cubic::from_fn(n, |_, _, _| v))
    }

    /// `e_ijk = 1` iff `i = j = k`; a right (not left) identity for `⋆`.
    pub fn right_identity(n: usize) -> Self {
        Self(Cubic::from_fn(n, |i, j, k| if i == j && j == k { 1.0 } else { 0.0 }))
    }

    pub(crate) fn from_cubic_unchecked(grid: Cubic) -> Self {
        Self(grid)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.0.get(i, j, k)
    }

    pub fn as_cubic(&self) -> &Cubic {
        &self.0
    }

    pub fn into_cubic(self) -> Cubic {
        self.0
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0.max_abs_diff(&other.0)
    }
}

/// Nonnegative cubic matrix whose tubes `P_ij:` each sum to 1; the
/// coefficient array of a quadratic stochastic operator.
#[derive(Debug, Clone, PartialEq)]
pub struct Cubic3Stochastic(Cubic);

impl Cubic3Stochastic {
    pub fn new(grid: Cubic, tol: Tolerance) -> Result<Self, Error> {
        admit(grid, StochasticType::Three, tol).map(Self)
    }

    pub fn from_frontal_slices<S, R>(slices: &[S], tol: Tolerance) -> Result<Self, Error>
    where
        S: AsRef<[R]>,
        R: AsRef<[f64]>,
    {
        Self::new(Cubic::from_frontal_slices(slices)?, tol)
    }

    /// Every entry `1/n`.
    pub fn uniform(n: usize) -> Self {
        let v = 1.0 / n as f64;
        Self(Cubic::from_fn(n, |_, _, _| v))
    }

    pub(crate) fn from_cubic_unchecked(grid: Cubic) -> Self {
        Self(grid)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.0.get(i, j, k)
    }

    pub fn as_cubic(&self) -> &Cubic {
        &self.0
    }

    pub fn into_cubic(self) -> Cubic {
        self.0
    }
}

fn admit(grid: Cubic, kind: StochasticType, tol: Tolerance) -> Result<Cubic, Error> {
    grid.validate(kind, tol)?;
    let mut grid = grid;
    clamp_nonnegative(grid.data_mut());
    Ok(grid)
}

/// A point of the simplex `S^{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexVector(Vec<f64>);

impl SimplexVector {
    pub fn new(values: Vec<f64>, tol: Tolerance) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::ZeroDimension);
        }
        validate_simplex(&values, tol)?;
        let mut values = values;
        clamp_nonnegative(&mut values);
        Ok(Self(values))
    }

    pub fn uniform(n: usize) -> Self {
        Self(vec![1.0 / n as f64; n])
    }

    /// The vertex `e_m` (0-based `m`).
    pub fn vertex(n: usize, m: usize) -> Result<Self, Error> {
        if m >= n {
            return Err(Error::IndexOutOfRange { index: m + 1, n });
        }
        let mut v = vec![0.0; n];
        v[m] = 1.0;
        Ok(Self(v))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

/// Segregation coefficients `(λ₁, λ₂)`: nonnegative, summing to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weights {
    first: f64,
    second: f64,
}

impl Weights {
    /// `(1, 0)`, the `·` product.
    pub const DOT: Weights = Weights { first: 1.0, second: 0.0 };
    /// `(½, ½)`, the equally weighted product.
    pub const STAR: Weights = Weights { first: 0.5, second: 0.5 };

    pub fn new(first: f64, second: f64) -> Result<Self, Error> {
        Self::with_tolerance(first, second, Tolerance::default())
    }

    pub fn with_tolerance(first: f64, second: f64, tol: Tolerance) -> Result<Self, Error> {
        let ok = first.is_finite()
            && second.is_finite()
            && tol.admits_entry(first)
            && tol.admits_entry(second)
            && tol.admits_sum(first + second);
        if ok {
            Ok(Self { first: first.max(0.0), second: second.max(0.0) })
        } else {
            Err(Error::Weights { first, second })
        }
    }

    pub fn first(&self) -> f64 {
        self.first
    }

    pub fn second(&self) -> f64 {
        self.second
    }
}

/// `λ·self + (1 − λ)·other`, entrywise.
pub trait ConvexCombine: Sized {
    fn convex_combine(&self, other: &Self, lambda: f64) -> Result<Self, Error>;
}

fn check_lambda(lambda: f64) -> Result<(), Error> {
    if (0.0..=1.0).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::ConvexWeight(lambda))
    }
}

fn mix(a: f64, b: f64, lambda: f64) -> f64 {
    lambda * a + (1.0 - lambda) * b
}

impl ConvexCombine for StochasticMatrix {
    fn convex_combine(&self, other: &Self, lambda: f64) -> Result<Self, Error> {
        check_lambda(lambda)?;
        ensure_same(self.n(), other.n())?;
        let data = self.0.as_slice().iter().zip(other.0.as_slice()).map(|(&a, &b)| mix(a, b, lambda)).collect();
        Ok(Self(Matrix::new(self.n(), data)?))
    }
}

impl ConvexCombine for CubicStochastic12 {
    fn convex_combine(&self, other: &Self, lambda: f64) -> Result<Self, Error> {
        check_lambda(lambda)?;
        ensure_same(self.n(), other.n())?;
        Ok(Self(self.0.zip_with(&other.0, |a, b| mix(a, b, lambda))))
    }
}

impl ConvexCombine for Cubic3Stochastic {
    fn convex_combine(&self, other: &Self, lambda: f64) -> Result<Self, Error> {
        check_lambda(lambda)?;
        ensure_same(self.n(), other.n())?;
        Ok(Self(self.0.zip_with(&other.0, |a, b| mix(a, b, lambda))))
    }
}

impl ConvexCombine for SimplexVector {
    fn convex_combine(&self, other: &Self, lambda: f64) -> Result<Self, Error> {
        check_lambda(lambda)?;
        ensure_same(self.n(), other.n())?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(&a, &b)| mix(a, b, lambda)).collect()))
    }
}
