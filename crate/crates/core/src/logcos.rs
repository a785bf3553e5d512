//! `∫₀^{1/2} ln cos(πx) dx = −ln √2` and the double-angle relation
//! `∫₀^{1/2} ln sin(2πx) dx = ln √2 + 2 ∫₀^{1/2} ln sin(πx) dx`.
//!
//! The logarithmic endpoint singularity is split off: near the singular
//! end the integrand becomes `ln sin(πt)` with `t` small, and
//! `ln sin(πt) = ln(πt) + ln(sin(πt)/(πt))`. The first piece integrates in
//! closed form to `δ(ln(πδ) − 1)`; the second is analytic and goes to the
//! adaptive engine.

use std::f64::consts::{LN_2, PI};

use crate::closed_forms::ClosedForms;
use crate::error::{check_tolerance, Error, Result};
use crate::quadrature::{self, QuadratureResult};
use crate::report::IdentityReport;

/// Default width of the interval split off at a singular endpoint.
pub const DEFAULT_SPLIT: f64 = 1e-3;

/// Below this `t`, `ln(sin(πt)/(πt))` comes from its Taylor series.
pub const SINC_TAYLOR_CUTOFF: f64 = 1e-4;

/// Smallest tolerance accepted by [`log_cos_integral`].
pub const MIN_TOLERANCE: f64 = 1e-10;

/// Smallest tolerance accepted by [`double_angle_check`].
pub const DOUBLE_ANGLE_MIN_TOLERANCE: f64 = 1e-8;

/// `−ln √2`.
pub fn log_cos_integral_exact() -> f64 {
    -0.5 * LN_2
}

/// `ln cos(πx)` on `[0, 1/2)`; past `x = 1/4` through `sin(π(1/2 − x))`.
pub(crate) fn ln_cos_pi(x: f64) -> f64 {
    if x <= 0.25 {
        (PI * x).cos().ln()
    } else {
        (PI * (0.5 - x)).sin().ln()
    }
}

/// `ln sin(πx)` on `(0, 1/2]`.
pub(crate) fn ln_sin_pi(x: f64) -> f64 {
    if x <= 0.25 {
        (PI * x).sin().ln()
    } else {
        (PI * (0.5 - x)).cos().ln()
    }
}

/// `ln sin(2πx)` on `(0, 1/2)`.
fn ln_sin_two_pi(x: f64) -> f64 {
    let s = 2.0 * x;
    ln_sin_pi(if s > 0.5 { 1.0 - s } else { s })
}

/// `ln(sin(πt)/(πt))`, analytic at `t = 0`.
pub fn log_sinc_pi(t: f64) -> f64 {
    let y = PI * t;
    if t.abs() < SINC_TAYLOR_CUTOFF {
        let y2 = y * y;
        -y2 * (1.0 / 6.0 + y2 * (1.0 / 180.0 + y2 / 2835.0))
    } else {
        (y.sin() / y).ln()
    }
}

/// `∫₀^δ ln(πt) dt = δ(ln(πδ) − 1)`.
pub fn log_sin_leading_piece(delta: f64) -> f64 {
    delta * ((PI * delta).ln() - 1.0)
}

fn check_split(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta <= 0.25) {
        return Err(Error::Domain {
            what: "split",
            value: delta,
            domain: "(0, 1/4]",
        });
    }
    Ok(())
}

/// `∫₀^δ ln sin(πt) dt`.
fn log_sin_near_zero(delta: f64, tol: f64, forms: &ClosedForms) -> Result<QuadratureResult> {
    let mut r = quadrature::integrate(log_sinc_pi, 0.0, delta, tol)?;
    r.value += (forms.log_sin_leading_piece)(delta);
    Ok(r)
}

/// `∫₀^{1/2} ln cos(πx) dx`, split `δ = 10⁻³` away from the singular end.
pub fn log_cos_integral(tol: f64) -> Result<QuadratureResult> {
    log_cos_integral_split(tol, DEFAULT_SPLIT)
}

pub fn log_cos_integral_split(tol: f64, delta: f64) -> Result<QuadratureResult> {
    log_cos_integral_with(tol, delta, &ClosedForms::STANDARD)
}

pub fn log_cos_integral_with(
    tol: f64,
    delta: f64,
    forms: &ClosedForms,
) -> Result<QuadratureResult> {
    check_tolerance(tol, MIN_TOLERANCE)?;
    check_split(delta)?;
    let smooth = quadrature::integrate(ln_cos_pi, 0.0, 0.5 - delta, 0.5 * tol)?;
    let singular = log_sin_near_zero(delta, 0.5 * tol, forms)?;
    Ok(smooth.combine(singular, tol))
}

/// `∫₀^{1/2} ln sin(πx) dx`, the mirror image of [`log_cos_integral`].
pub fn log_sin_integral(tol: f64) -> Result<QuadratureResult> {
    log_sin_integral_split(tol, DEFAULT_SPLIT)
}

pub fn log_sin_integral_split(tol: f64, delta: f64) -> Result<QuadratureResult> {
    log_sin_integral_with(tol, delta, &ClosedForms::STANDARD)
}

pub fn log_sin_integral_with(
    tol: f64,
    delta: f64,
    forms: &ClosedForms,
) -> Result<QuadratureResult> {
    check_tolerance(tol, MIN_TOLERANCE)?;
    check_split(delta)?;
    let singular = log_sin_near_zero(delta, 0.5 * tol, forms)?;
    let smooth = quadrature::integrate(ln_sin_pi, delta, 0.5, 0.5 * tol)?;
    Ok(singular.combine(smooth, tol))
}

/// `∫₀^{1/2} ln sin(2πx) dx` against `ln √2 + 2 ∫₀^{1/2} ln sin(πx) dx`.
///
/// `ln sin(2πx)` is singular at both ends. Near either end it is
/// `ln sin(2πt)` in the distance `t`, so both end pieces together equal
/// `∫₀^{2δ} ln sin(πs) ds`.
pub fn double_angle_check(tol: f64) -> Result<IdentityReport> {
    double_angle_check_with(tol, DEFAULT_SPLIT, &ClosedForms::STANDARD)
}

pub fn double_angle_check_with(
    tol: f64,
    delta: f64,
    forms: &ClosedForms,
) -> Result<IdentityReport> {
    check_tolerance(tol, DOUBLE_ANGLE_MIN_TOLERANCE)?;
    check_split(delta)?;
    let sub = 0.25 * tol;

    let ends = log_sin_near_zero(2.0 * delta, sub, forms)?;
    let middle = quadrature::integrate(ln_sin_two_pi, delta, 0.5 - delta, sub)?;
    let lhs = ends
        .combine(middle, 2.0 * sub)
        .require_converged(2.0 * sub)?;

    let c = log_sin_integral_with(sub, delta, forms)?.require_converged(sub)?;
    let rhs = 0.5 * LN_2 + 2.0 * c.value;

    Ok(IdentityReport::new("double_angle", lhs.value, rhs, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_piece_value() {
        assert!((log_sin_leading_piece(1e-3) - -0.006_763_025_393_132_737).abs() < 1e-17);
    }

    #[test]
    fn sinc_branches_agree_at_cutoff() {
        let t = SINC_TAYLOR_CUTOFF;
        let y = PI * t;
        let direct = (y.sin() / y).ln();
        let below = log_sinc_pi(f64::from_bits(t.to_bits() - 1));
        assert!((direct - below).abs() < 1e-16);
        assert_eq!(log_sinc_pi(0.0), 0.0);
    }

    #[test]
    fn log_cos_value() {
        let r = log_cos_integral(1e-8).unwrap();
        assert!(r.converged);
        assert!((r.value - log_cos_integral_exact()).abs() <= 2e-8);
    }

    #[test]
    fn sin_and_cos_agree() {
        let c = log_cos_integral(1e-10).unwrap();
        let s = log_sin_integral(1e-10).unwrap();
        assert!((c.value - s.value).abs() <= 2e-8);
    }

    #[test]
    fn argument_checks() {
        assert!(matches!(
            log_cos_integral(1e-11),
            Err(Error::ToleranceTooSmall { .. })
        ));
        assert!(matches!(
            log_cos_integral_split(1e-8, 0.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            log_cos_integral_split(1e-8, 0.3),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            double_angle_check(1e-9),
            Err(Error::ToleranceTooSmall { .. })
        ));
    }

    #[test]
    fn double_angle_holds() {
        let r = double_angle_check(1e-7).unwrap();
        assert!(r.pass, "{r:?}");
        assert!((r.lhs - log_cos_integral_exact()).abs() < 1e-7);
        // Fixed point c = ln √2 + 2c.
        assert!(
            (0.5 * LN_2 + 2.0 * log_cos_integral_exact() - log_cos_integral_exact()).abs() < 1e-16
        );
    }
}
