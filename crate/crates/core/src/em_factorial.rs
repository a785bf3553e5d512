//! The first-order Euler–Maclaurin identity for `ln n!`,
//!
//! ```text
//! ln n! = n ln n − n + 1 + ln √n + ∫₀^{n−1} (x − ⌊x⌋ − 1/2)/(1 + x) dx,
//! ```
//!
//! and the ratio of `n!` to its Stirling approximant `nⁿ e⁻ⁿ √(2πn)`.
//!
//! The sawtooth integral is never evaluated by quadrature. Over `[ν, ν+1]`
//! it has the closed form `1 − (ν + 3/2) ln((ν + 2)/(ν + 1))`, and the
//! integrals are accumulated unit by unit. Everything involving `n!` stays
//! in the log domain.

use serde::Serialize;

use crate::closed_forms::ClosedForms;
use crate::error::{Error, Result};
use crate::summation::CompensatedSum;

/// Largest `n` accepted by the direct and Euler–Maclaurin evaluations.
pub const MAX_N: u64 = 1_000_000;

/// Largest `n_max` accepted by [`convergence_table`].
pub const MAX_TABLE_N: u64 = 10_000;

/// One row of the Stirling convergence table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: u64,
    pub log_fact_direct: f64,
    pub log_fact_em: f64,
    pub stirling_ratio: f64,
    pub em_residual: f64,
}

/// `1 − a·ln((a + 1/2)/(a − 1/2))` for `a >= 3/2`.
///
/// With `u = 1/(2a)` the logarithm is `2 atanh(u)`, so the value is
/// `−Σ_{k≥1} u^{2k}/(2k + 1)`. Summing that series avoids the cancellation
/// of the textbook form once `a` is large. `u <= 1/3` makes each term at
/// most a ninth of the previous one.
pub(crate) fn log_ratio_defect(a: f64) -> f64 {
    debug_assert!(a >= 1.5);
    let u2 = (0.5 / a).powi(2);
    let mut power = u2;
    let mut sum = 0.0;
    let mut k = 1.0;
    loop {
        let t = power / (2.0 * k + 1.0);
        sum += t;
        if t <= 0.25 * f64::EPSILON * sum {
            break;
        }
        power *= u2;
        k += 1.0;
    }
    -sum
}

fn check_n(n: u64, limit: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain {
            what: "n",
            value: 0.0,
            domain: "n >= 1",
        });
    }
    if n > limit {
        return Err(Error::Budget {
            what: "n",
            requested: n,
            limit,
        });
    }
    Ok(())
}

/// `Σ_{k=1}^{n} ln k`; zero for `n = 0`.
pub fn log_factorial_direct(n: u64) -> Result<f64> {
    if n > MAX_N {
        return Err(Error::Budget {
            what: "n",
            requested: n,
            limit: MAX_N,
        });
    }
    Ok((1..=n)
        .map(|k| (k as f64).ln())
        .collect::<CompensatedSum>()
        .value())
}

/// `∫_ν^{ν+1} (x − ⌊x⌋ − 1/2)/(1 + x) dx = 1 − (ν + 3/2) ln((ν + 2)/(ν + 1))`.
///
/// Strictly negative and strictly increasing towards zero.
pub fn sawtooth_unit_integral(nu: u64) -> f64 {
    log_ratio_defect(nu as f64 + 1.5)
}

/// `∫₀^T (x − ⌊x⌋ − 1/2)/(1 + x) dx` as a sum of unit integrals. `T = 0`
/// gives the empty integral.
pub fn sawtooth_integral(t: u64) -> Result<f64> {
    sawtooth_integral_with(t, &ClosedForms::STANDARD)
}

pub fn sawtooth_integral_with(t: u64, forms: &ClosedForms) -> Result<f64> {
    if t > MAX_N {
        return Err(Error::Budget {
            what: "T",
            requested: t,
            limit: MAX_N,
        });
    }
    Ok((0..t)
        .map(forms.sawtooth_unit_integral)
        .collect::<CompensatedSum>()
        .value())
}

fn em_leading(n: u64) -> f64 {
    let nf = n as f64;
    let ln_n = nf.ln();
    nf * ln_n - nf + 1.0 + 0.5 * ln_n
}

/// `ln n!` through the Euler–Maclaurin identity. Exact up to rounding.
pub fn log_factorial_em(n: u64) -> Result<f64> {
    log_factorial_em_with(n, &ClosedForms::STANDARD)
}

pub fn log_factorial_em_with(n: u64, forms: &ClosedForms) -> Result<f64> {
    check_n(n, MAX_N)?;
    Ok(em_leading(n) + sawtooth_integral_with(n - 1, forms)?)
}

/// `ln(nⁿ e⁻ⁿ √(2πn)) = n ln n − n + ½ ln(2πn)`.
pub fn stirling_log_approx(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain {
            what: "n",
            value: 0.0,
            domain: "n >= 1",
        });
    }
    let nf = n as f64;
    Ok(nf * nf.ln() - nf + 0.5 * (std::f64::consts::TAU * nf).ln())
}

/// `n! / (nⁿ e⁻ⁿ √(2πn))`.
pub fn stirling_ratio(n: u64) -> Result<f64> {
    check_n(n, MAX_N)?;
    Ok((log_factorial_direct(n)? - stirling_log_approx(n)?).exp())
}

/// Rows for `n = 1..=n_max`, ascending.
///
/// Both sums are carried forward incrementally, in the same order as
/// [`log_factorial_direct`] and [`sawtooth_integral`], so each row matches
/// the standalone functions bit for bit.
pub fn convergence_table(n_max: u64) -> Result<Vec<ConvergenceRow>> {
    check_n(n_max, MAX_TABLE_N)?;
    let mut log_fact = CompensatedSum::new();
    let mut sawtooth = CompensatedSum::new();
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        log_fact.add((n as f64).ln());
        if n >= 2 {
            sawtooth.add(sawtooth_unit_integral(n - 2));
        }
        let direct = log_fact.value();
        let em = em_leading(n) + sawtooth.value();
        rows.push(ConvergenceRow {
            n,
            log_fact_direct: direct,
            log_fact_em: em,
            stirling_ratio: (direct - stirling_log_approx(n)?).exp(),
            em_residual: em - direct,
        });
    }
    Ok(rows)
}
