//! Error and validation-report types.
//!
//! Indices stored in these types are 0-based. `Display` renders them 1-based,
//! matching the `p_ijk` notation used in documents and on the command line.

use core::fmt;

/// The stochasticity condition a value is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Square matrix, every column sums to 1.
    ColumnStochastic,
    /// Vector on the probability simplex.
    Simplex,
    /// Cubic, `Σ_{i,j} p_ijk = 1` for every `k`.
    Type12,
    /// Cubic, `Σ_{j,k} p_ijk = 1` for every `i`.
    Type23,
    /// Cubic, `Σ_{i,k} p_ijk = 1` for every `j`.
    Type13,
    /// Cubic, `Σ_k p_ijk = 1` for every `(i, j)`.
    ThreeStochastic,
    /// Cubic, `p_ijk = p_jik`.
    Symmetric12,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::ColumnStochastic => "column stochastic",
            Condition::Simplex => "simplex vector",
            Condition::Type12 => "stochastic of type (1,2)",
            Condition::Type23 => "stochastic of type (2,3)",
            Condition::Type13 => "stochastic of type (1,3)",
            Condition::ThreeStochastic => "3-stochastic",
            Condition::Symmetric12 => "(1,2)-symmetric",
        })
    }
}

/// Location of an offending entry or of the index set whose sum failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Site {
    /// The whole value (simplex vectors).
    Whole,
    Entry1(usize),
    Entry2(usize, usize),
    Entry3(usize, usize, usize),
    /// Column `j` of a square matrix.
    Column(usize),
    /// Frontal slice `k` (`i`, `j` summed).
    Frontal(usize),
    /// Horizontal slice `i` (`j`, `k` summed).
    Horizontal(usize),
    /// Lateral slice `j` (`i`, `k` summed).
    Lateral(usize),
    /// Tube `(i, j)` (`k` summed).
    Tube(usize, usize),
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Site::Whole => f.write_str("vector"),
            Site::Entry1(i) => write!(f, "entry {}", i + 1),
            Site::Entry2(i, j) => write!(f, "entry (i={}, j={})", i + 1, j + 1),
            Site::Entry3(i, j, k) => write!(f, "entry (i={}, j={}, k={})", i + 1, j + 1, k + 1),
            Site::Column(j) => write!(f, "column j={}", j + 1),
            Site::Frontal(k) => write!(f, "frontal slice k={}", k + 1),
            Site::Horizontal(i) => write!(f, "horizontal slice i={}", i + 1),
            Site::Lateral(j) => write!(f, "lateral slice j={}", j + 1),
            Site::Tube(i, j) => write!(f, "tube (i={}, j={})", i + 1, j + 1),
        }
    }
}

/// First failure found while validating a value against a [`Condition`].
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum Violation {
    #[error("{condition}: {site} is not finite ({value})")]
    NotFinite { condition: Condition, site: Site, value: f64 },
    #[error("{condition}: {site} is negative ({value})")]
    Negative { condition: Condition, site: Site, value: f64 },
    #[error("{condition}: {site} sums to {sum} (expected 1)")]
    Sum { condition: Condition, site: Site, sum: f64 },
    #[error("{condition}: {site} differs from its (1,2)-transpose by {diff}")]
    Asymmetric { condition: Condition, site: Site, diff: f64 },
}

impl Violation {
    pub fn condition(&self) -> Condition {
        match *self {
            Violation::NotFinite { condition, .. }
            | Violation::Negative { condition, .. }
            | Violation::Sum { condition, .. }
            | Violation::Asymmetric { condition, .. } => condition,
        }
    }

    pub fn site(&self) -> Site {
        match *self {
            Violation::NotFinite { site, .. }
            | Violation::Negative { site, .. }
            | Violation::Sum { site, .. }
            | Violation::Asymmetric { site, .. } => site,
        }
    }
}

/// Coarse classification used by front ends (exit codes, messages).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Wrong sizes, lengths or indices.
    Shape,
    /// A stochasticity condition failed.
    Validation,
    /// A scalar parameter is outside its domain.
    Domain,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("expected {expected} values, found {found}")]
    Length { expected: usize, found: usize },
    #[error("grid is not cubical: expected {expected} entries along an axis, found {found}")]
    NotCubical { expected: usize, found: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error("convex weight {0} is outside [0, 1]")]
    ConvexWeight(f64),
    #[error("segregation weights ({first}, {second}) must be nonnegative and sum to 1")]
    Weights { first: f64, second: f64 },
    #[error("mixing weight ({row}, {col}) is negative ({value})")]
    NegativeMixing { row: usize, col: usize, value: f64 },
    #[error("mixing weights of row {row} sum to {sum} (expected 1)")]
    MixingRowSum { row: usize, sum: f64 },
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("tolerance must be finite and nonnegative, got {0}")]
    Tolerance(f64),
    #[error("iteration needs max_steps >= 1 and tol > 0 (got {max_steps}, {tol})")]
    IterationParameters { max_steps: usize, tol: f64 },
    #[error("not a permutation: image {image} is out of range or repeated")]
    NotPermutation { image: usize },
    #[error("supplied inverse does not invert the matrix (residual {residual})")]
    NotInverse { residual: f64 },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ZeroDimension
            | Error::Length { .. }
            | Error::NotCubical { .. }
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. } => ErrorKind::Shape,
            Error::Violation(_) | Error::NotInverse { .. } => ErrorKind::Validation,
            Error::ConvexWeight(_)
            | Error::Weights { .. }
            | Error::NegativeMixing { .. }
            | Error::MixingRowSum { .. }
            | Error::ZeroPower
            | Error::Tolerance(_)
            | Error::IterationParameters { .. }
            | Error::NotPermutation { .. } => ErrorKind::Domain,
        }
    }
}

pub(crate) fn ensure_same(left: usize, right: usize) -> Result<(), Error> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}
