//! Partial fraction expansion of the tangent,
//! `π tan(πx) = Σ_{ν≥0} 2x / ((ν + 1/2)² − x²)`, on `0 <= x < 1/2`.
//!
//! The terms are positive and decreasing in ν, and
//! `G(t) = ln((t + 1/2 + x)/(t + 1/2 − x))` satisfies `−G'(t) = term(t)`,
//! so the integral test brackets the tail after `N` terms between `G(N)`
//! and `G(N − 1)`.

use std::f64::consts::PI;

use crate::bracket::BracketedValue;
use crate::closed_forms::ClosedForms;
use crate::error::{check_tolerance, Error, Result};
use crate::report::IdentityReport;
use crate::summation::CompensatedSum;

/// Upper limit on the number of series terms summed in one call.
pub const MAX_TERMS: u64 = 100_000_000;

pub(crate) fn check_x(x: f64) -> Result<()> {
    if x == 0.5 {
        return Err(Error::Pole { x });
    }
    if !(0.0..0.5).contains(&x) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "[0, 1/2)",
        });
    }
    Ok(())
}

fn check_terms(n: u64, min: u64) -> Result<()> {
    if n < min {
        return Err(Error::Domain {
            what: "N",
            value: n as f64,
            domain: if min == 1 { "N >= 1" } else { "N >= 2" },
        });
    }
    if n > MAX_TERMS {
        return Err(Error::Budget {
            what: "N",
            requested: n,
            limit: MAX_TERMS,
        });
    }
    Ok(())
}

#[inline]
fn term(nu: u64, x: f64) -> f64 {
    let a = nu as f64 + 0.5;
    2.0 * x / ((a - x) * (a + x))
}

/// `ln((a + x)/(a − x))`, evaluated as `2 atanh(x/a)` to avoid cancellation.
#[inline]
fn log_ratio(a: f64, x: f64) -> f64 {
    2.0 * (x / a).atanh()
}

/// Sum of the first `n` terms, `ν = 0..n`, accumulated in ascending ν.
pub fn tan_pf_partial(x: f64, n: u64) -> Result<f64> {
    check_x(x)?;
    check_terms(n, 1)?;
    Ok((0..n)
        .map(|nu| term(nu, x))
        .collect::<CompensatedSum>()
        .value())
}

/// Integral-test enclosure of `Σ_{ν≥n} 2x/((ν + 1/2)² − x²)`.
pub fn tan_pf_tail_bracket(x: f64, n: u64) -> Result<BracketedValue> {
    check_x(x)?;
    check_terms(n, 2)?;
    let nf = n as f64;
    Ok(BracketedValue::new(
        log_ratio(nf + 0.5, x),
        log_ratio(nf - 0.5, x),
    ))
}

/// Encloses `π tan(πx)` in a bracket no wider than `tol`.
///
/// The truncation level is chosen from `width <= 2x/((N − 1/2)² − x²)`
/// so that the tail accounts for at most half of `tol`; the rest is
/// reserved for the rounding allowance on the partial sum.
pub fn pi_tan_pi(x: f64, tol: f64) -> Result<BracketedValue> {
    pi_tan_pi_with(x, tol, &ClosedForms::STANDARD)
}

pub fn pi_tan_pi_with(x: f64, tol: f64, forms: &ClosedForms) -> Result<BracketedValue> {
    check_x(x)?;
    check_tolerance(tol, f64::MIN_POSITIVE)?;
    let n = truncation_for_width(x, 0.5 * tol)?;
    let partial = tan_pf_partial(x, n)?;
    let tail = (forms.tan_pf_tail_bracket)(x, n)?;
    // Rounding in the terms plus the compensated accumulation stays below
    // a few ulps of the total.
    let allowance = 8.0 * f64::EPSILON * (partial + tail.upper()).abs();
    let bracket = tail.shift(partial).widen(allowance);
    if bracket.width() > tol {
        return Err(Error::ToleranceTooSmall {
            tol,
            floor: bracket.width(),
        });
    }
    Ok(bracket)
}

/// Checks that the platform `π tan(πx)` lies inside the partial sum of `n`
/// terms plus the tail bracket. The report compares against the bracket
/// midpoint with the half-width as tolerance.
pub fn enclosure_check_with(x: f64, n: u64, forms: &ClosedForms) -> Result<IdentityReport> {
    let bracket = (forms.tan_pf_tail_bracket)(x, n)?.shift(tan_pf_partial(x, n)?);
    Ok(IdentityReport::new(
        format!("tangent_enclosure(x={x}, N={n})"),
        PI * (PI * x).tan(),
        bracket.midpoint(),
        bracket.half_width(),
    ))
}

/// Smallest `N >= 2` whose tail-bracket width is guaranteed `<= width`.
pub fn truncation_for_width(x: f64, width: f64) -> Result<u64> {
    check_x(x)?;
    check_tolerance(width, f64::MIN_POSITIVE)?;
    // 2x/((N - 1/2)^2 - x^2) <= width  <=>  N >= 1/2 + sqrt(2x/width + x^2)
    let needed = (0.5 + (2.0 * x / width + x * x).sqrt()).ceil();
    if needed.is_nan() || needed > MAX_TERMS as f64 {
        return Err(Error::Budget {
            what: "N",
            requested: if needed.is_finite() {
                needed as u64
            } else {
                u64::MAX
            },
            limit: MAX_TERMS,
        });
    }
    Ok((needed as u64).max(2))
}
