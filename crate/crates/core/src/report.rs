use serde::Serialize;

/// Outcome of comparing the two sides of a numerical identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityReport {
    /// `pass` is false whenever the difference is NaN.
    pub fn new(name: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let abs_diff = (lhs - rhs).abs();
        Self {
            name: name.into(),
            lhs,
            rhs,
            abs_diff,
            tolerance,
            pass: abs_diff <= tolerance,
        }
    }

    /// How much of the tolerance the residual uses; above 1 means failure.
    pub fn tolerance_ratio(&self) -> f64 {
        if self.abs_diff == 0.0 {
            0.0
        } else {
            self.abs_diff / self.tolerance
        }
    }
}
