//! Three independent routes to the Stirling constant `C = ln √(2π) − 1`:
//!
//! * the sawtooth integral `∫₀^∞ (x − ⌊x⌋ − 1/2)/(1 + x) dx`, as closed-form
//!   unit integrals plus a bracketed tail;
//! * quadrature of `F(x) = 8x²/(1 − 4x²) − πx tan(πx)` over `[0, 1/2]`;
//! * the series `Σ_{ν≥1} t_ν` of term-wise integrals
//!   `t_ν = ∫₀^{1/2} −2x²/((ν + 1/2)² − x²) dx = 1 − (ν + 1/2) ln((ν + 1)/ν)`.
//!
//! `t_{ν+1}` is the sawtooth integral over `[ν, ν + 1]`, so the sawtooth
//! tail past `T` is the series tail past `T`.

use std::f64::consts::PI;

use crate::bracket::BracketedValue;
use crate::closed_forms::ClosedForms;
use crate::em_factorial::{self, log_ratio_defect};
use crate::error::{check_tolerance, Error, Result};
use crate::logcos;
use crate::quadrature::{self, QuadratureResult};
use crate::report::IdentityReport;
use crate::summation::CompensatedSum;
use crate::tangent_series::{self, MAX_TERMS};

/// Distance from `x = 1/2` below which [`combined_integrand`] switches to
/// the Laurent expansion of `cot`.
pub const SEAM_DELTA: f64 = 1e-3;

/// Smallest tolerance accepted by [`constant_via_quadrature`].
pub const QUADRATURE_MIN_TOLERANCE: f64 = 1e-12;

/// Closest approach to `1/2` allowed in [`epsilon_identity_check`].
pub const EPSILON_MARGIN: f64 = 1e-6;

/// Smallest `T` accepted by [`identity_eq4_check`].
pub const MIN_SAWTOOTH_T: u64 = 10;

/// `ln √(2π) − 1`.
pub fn stirling_constant_closed() -> f64 {
    0.5 * std::f64::consts::TAU.ln() - 1.0
}

/// `1/(1 + 2x) + 1/(1 − 2x) − 2`.
pub fn partial_fraction_form(x: f64) -> f64 {
    1.0 / (1.0 + 2.0 * x) + 1.0 / (1.0 - 2.0 * x) - 2.0
}

fn check_half_open(x: f64) -> Result<()> {
    tangent_series::check_x(x)
}

/// `8x²/(1 − 4x²) − (1/(1 + 2x) + 1/(1 − 2x) − 2)`; zero up to rounding.
pub fn decomposition_residual(x: f64) -> Result<f64> {
    let r = decomposition_check_with(x, &ClosedForms::STANDARD)?;
    Ok(r.lhs - r.rhs)
}

/// Compares `8x²/(1 − 4x²)` with its partial fraction form, at a
/// tolerance of `1e-12` relative to the left side.
pub fn decomposition_check_with(x: f64, forms: &ClosedForms) -> Result<IdentityReport> {
    check_half_open(x)?;
    let lhs = 8.0 * x * x / (1.0 - 4.0 * x * x);
    let rhs = (forms.partial_fraction_form)(x);
    Ok(IdentityReport::new(
        format!("decomposition(x={x})"),
        lhs,
        rhs,
        1e-12 * lhs.abs().max(1.0),
    ))
}

// cot(y) = 1/y − y/3 − y³/45 − 2y⁵/945 − y⁷/4725 − …
fn cot_regular_part(y: f64) -> f64 {
    let y2 = y * y;
    y * (1.0 / 3.0 + y2 * (1.0 / 45.0 + y2 * (2.0 / 945.0 + y2 / 4725.0)))
}

fn combined_direct(x: f64, eps: f64) -> f64 {
    let rational = partial_fraction_form(x);
    // Past x = 1/4 go through cot(πε) so the pole is resolved in ε, which
    // is exact there.
    let tangent = if x <= 0.25 {
        PI * x * (PI * x).tan()
    } else {
        PI * x / (PI * eps).tan()
    };
    rational - tangent
}

/// With `ε = 1/2 − x`: `8x²/(1−4x²) = 1/(1+2x) + 1/(2ε) − 2` and
/// `πx cot(πε) = 1/(2ε) − 1 − πx·(cot regular part)`, so the `1/(2ε)` terms
/// cancel exactly.
fn combined_laurent(x: f64, eps: f64) -> f64 {
    -2.0 * x / (1.0 + 2.0 * x) + PI * x * cot_regular_part(PI * eps)
}

pub(crate) fn combined_integrand_value(x: f64) -> f64 {
    let eps = 0.5 - x;
    if eps < SEAM_DELTA {
        combined_laurent(x, eps)
    } else {
        combined_direct(x, eps)
    }
}

/// Continuous extension of `F(x) = 8x²/(1 − 4x²) − πx tan(πx)` to
/// `[0, 1/2]`, with `F(1/2) = −1/2`.
pub fn combined_integrand(x: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&x) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "[0, 1/2]",
        });
    }
    Ok(combined_integrand_value(x))
}

/// A deliberately broken integrand: the Laurent branch with the sign of the
/// regular part flipped. Used for fault injection only.
pub(crate) fn combined_integrand_flipped_laurent(x: f64) -> Result<f64> {
    let eps = 0.5 - x;
    if eps < SEAM_DELTA {
        Ok(-2.0 * x / (1.0 + 2.0 * x) - PI * x * cot_regular_part(PI * eps))
    } else {
        combined_integrand(x)
    }
}

/// `∫₀^{1/2} F(x) dx` by adaptive quadrature.
///
/// The interval is split at the branch seam `1/2 − δ`, each piece getting
/// half the tolerance, so that the Laurent branch is actually sampled.
pub fn constant_via_quadrature(tol: f64) -> Result<QuadratureResult> {
    constant_via_quadrature_with(tol, &ClosedForms::STANDARD)
}

pub fn constant_via_quadrature_with(tol: f64, forms: &ClosedForms) -> Result<QuadratureResult> {
    check_tolerance(tol, QUADRATURE_MIN_TOLERANCE)?;
    let seam = 0.5 - SEAM_DELTA;
    let direct = quadrature::try_integrate(forms.combined_integrand, 0.0, seam, 0.5 * tol)?;
    let laurent = quadrature::try_integrate(forms.combined_integrand, seam, 0.5, 0.5 * tol)?;
    Ok(direct.combine(laurent, tol))
}

/// `t_ν = 1 − (ν + 1/2) ln((ν + 1)/ν)` for `ν >= 1`.
pub fn constant_series_term(nu: u64) -> Result<f64> {
    if nu == 0 {
        return Err(Error::Domain {
            what: "nu",
            value: 0.0,
            domain: "nu >= 1",
        });
    }
    Ok(log_ratio_defect(nu as f64 + 0.5))
}

/// `Σ_{ν=1}^{N} t_ν`.
pub fn constant_series_partial(n: u64) -> Result<f64> {
    constant_series_partial_with(n, &ClosedForms::STANDARD)
}

pub fn constant_series_partial_with(n: u64, forms: &ClosedForms) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain {
            what: "N",
            value: 0.0,
            domain: "N >= 1",
        });
    }
    if n > MAX_TERMS {
        return Err(Error::Budget {
            what: "N",
            requested: n,
            limit: MAX_TERMS,
        });
    }
    let mut sum = CompensatedSum::new();
    for nu in 1..=n {
        sum.add((forms.constant_series_term)(nu)?);
    }
    Ok(sum.value())
}

/// Encloses `Σ_{ν>N} t_ν`.
///
/// With `u = 1/(2ν + 1)`, `−t_ν = Σ_{k≥1} u^{2k}/(2k + 1)`, so
///
/// ```text
/// u²/3 <= −t_ν <= u²/(3(1 − u²)) = 1/(12ν(ν + 1)).
/// ```
///
/// The upper bound telescopes to `1/(12(N + 1))`. The lower bound differs
/// from it by `1/(12ν(ν + 1)(2ν + 1)²) <= 1/(48ν⁴)`, and
/// `Σ_{ν>N} 1/ν⁴ <= 1/(3N³)`. Hence the tail lies in
/// `[−1/(12(N + 1)), −1/(12(N + 1)) + 1/(144N³)]`.
pub fn constant_series_tail_bracket(n: u64) -> Result<BracketedValue> {
    if n < 2 {
        return Err(Error::Domain {
            what: "N",
            value: n as f64,
            domain: "N >= 2",
        });
    }
    let nf = n as f64;
    let lower = -1.0 / (12.0 * (nf + 1.0));
    Ok(BracketedValue::new(
        lower,
        lower + 1.0 / (144.0 * nf * nf * nf),
    ))
}

/// Sawtooth integral up to `T` plus the tail-bracket midpoint, against
/// quadrature of `F` over `[0, 1/2]`.
pub fn identity_eq4_check(t: u64, tol: f64) -> Result<IdentityReport> {
    identity_eq4_check_with(t, tol, &ClosedForms::STANDARD)
}

pub fn identity_eq4_check_with(t: u64, tol: f64, forms: &ClosedForms) -> Result<IdentityReport> {
    if t < MIN_SAWTOOTH_T {
        return Err(Error::Domain {
            what: "T",
            value: t as f64,
            domain: "T >= 10",
        });
    }
    let tail = (forms.constant_series_tail_bracket)(t)?;
    let lhs = em_factorial::sawtooth_integral_with(t, forms)? + tail.midpoint();
    let q = constant_via_quadrature_with(tol, forms)?.require_converged(tol)?;
    Ok(IdentityReport::new(
        format!("sawtooth_vs_integrand(T={t})"),
        lhs,
        q.value,
        tol + tail.width() + q.error_estimate,
    ))
}

fn one_over_one_minus_2x_minus_pi_x_tan(x: f64) -> f64 {
    if x <= 0.25 {
        1.0 / (1.0 - 2.0 * x) - PI * x * (PI * x).tan()
    } else {
        let eps = 0.5 - x;
        1.0 / (2.0 * eps) - PI * x / (PI * eps).tan()
    }
}

/// For `0 < ε < 1/2`:
///
/// ```text
/// ∫₀^ε (1/(1−2x) − πx tan πx) dx
///     = (ε − 1/2) ln cos(πε) + ½ ln(cos(πε)/(1 − 2ε)) − ∫₀^ε ln cos(πx) dx
/// ```
///
/// Both integrals run at `tol/2`; the report's tolerance is `tol`.
pub fn epsilon_identity_check(eps: f64, tol: f64) -> Result<IdentityReport> {
    if !(eps > 0.0 && eps <= 0.5 - EPSILON_MARGIN) {
        return Err(Error::Domain {
            what: "epsilon",
            value: eps,
            domain: "(0, 1/2 - 1e-6]",
        });
    }
    check_tolerance(tol, quadrature::MIN_TOLERANCE)?;
    let sub = (0.5 * tol).max(quadrature::MIN_TOLERANCE);

    let lhs = quadrature::integrate(one_over_one_minus_2x_minus_pi_x_tan, 0.0, eps, sub)?
        .require_converged(sub)?;
    let ln_cos_integral =
        quadrature::integrate(logcos::ln_cos_pi, 0.0, eps, sub)?.require_converged(sub)?;
    let ln_cos_eps = logcos::ln_cos_pi(eps);
    let rhs = (eps - 0.5) * ln_cos_eps + 0.5 * (ln_cos_eps - (1.0 - 2.0 * eps).ln())
        - ln_cos_integral.value;

    Ok(IdentityReport::new(
        format!("epsilon_identity(eps={eps})"),
        lhs.value,
        rhs,
        tol,
    ))
}
