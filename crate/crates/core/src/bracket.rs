use serde::Serialize;

/// Closed interval `[lower, upper]` known to contain some quantity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BracketedValue {
    lower: f64,
    upper: f64,
}

impl BracketedValue {
    /// Builds a bracket, swapping the bounds if they arrive reversed.
    pub fn new(a: f64, b: f64) -> Self {
        if a <= b {
            Self { lower: a, upper: b }
        } else {
            Self { lower: b, upper: a }
        }
    }

    pub fn point(x: f64) -> Self {
        Self { lower: x, upper: x }
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn half_width(&self) -> f64 {
        0.5 * self.width()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }

    /// Shifts both bounds by `offset`.
    pub fn shift(self, offset: f64) -> Self {
        Self::new(self.lower + offset, self.upper + offset)
    }

    /// Widens both bounds outward by `margin >= 0`.
    pub fn widen(self, margin: f64) -> Self {
        Self::new(self.lower - margin, self.upper + margin)
    }
}
