use crate::error::{Condition, Error, Site, Violation};

/// Admission tolerance for nonnegativity and unit-sum checks.
///
/// An entry `v` passes if `v >= -eps`; a sum `s` passes if `|s - 1| <= eps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self, Error> {
        if eps.is_finite() && eps >= 0.0 {
            Ok(Self { eps })
        } else {
            Err(Error::Tolerance(eps))
        }
    }

    /// Zero tolerance: exact nonnegativity and exact unit sums.
    pub const fn exact() -> Self {
        Self { eps: 0.0 }
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn admits_sum(&self, sum: f64) -> bool {
        (sum - 1.0).abs() <= self.eps
    }

    pub fn admits_entry(&self, value: f64) -> bool {
        value >= -self.eps
    }

    pub(crate) fn check_entry(&self, condition: Condition, site: Site, value: f64) -> Result<(), Violation> {
        if !value.is_finite() {
            Err(Violation::NotFinite { condition, site, value })
        } else if !self.admits_entry(value) {
            Err(Violation::Negative { condition, site, value })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_sum(&self, condition: Condition, site: Site, sum: f64) -> Result<(), Violation> {
        if self.admits_sum(sum) {
            Ok(())
        } else {
            Err(Violation::Sum { condition, site, sum })
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps: Self::DEFAULT_EPS }
    }
}

/// Clamp admitted entries in `(-eps, 0)` to zero.
pub(crate) fn clamp_nonnegative(values: &mut [f64]) {
    for v in values.iter_mut() {
        if *v < 0.0 {
            *v = 0.0;
        }
    }
}
