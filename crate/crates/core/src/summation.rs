//! Compensated accumulation of floating point sums.

use std::ops::AddAssign;

/// Running sum with an error-free-transformation correction term.
///
/// Every addition is split by TwoSum into the rounded result and its exact
/// rounding error; the errors are accumulated separately and folded back in
/// by [`CompensatedSum::value`]. Unlike plain Kahan summation this stays
/// accurate when an addend is larger than the running sum.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        let z = t - self.sum;
        self.comp += (self.sum - (t - z)) + (x - z);
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

/// Compensated sum of an iterator of `f64`.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<CompensatedSum>().value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_addends_lost_by_naive_sum() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        let naive: f64 = xs.iter().sum();
        assert_eq!(naive, 0.0);
        assert_eq!(compensated_sum(xs), 2.0);
    }

    #[test]
    fn harmonic_tenth_power() {
        // H_n for n = 10^6 against the asymptotic expansion, good to ~1e-25.
        let n = 1_000_000u32;
        let h = compensated_sum((1..=n).map(|k| 1.0 / f64::from(k)));
        let nf = f64::from(n);
        let gamma = 0.577_215_664_901_532_9_f64;
        let expected = nf.ln() + gamma + 1.0 / (2.0 * nf) - 1.0 / (12.0 * nf * nf);
        assert!((h - expected).abs() < 4e-15, "{h} vs {expected}");
    }

    #[test]
    fn empty_is_zero() {
        assert_eq!(compensated_sum(std::iter::empty()), 0.0);
    }
}
