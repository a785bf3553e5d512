//! The full verification suite behind `stirling-lab verify`.
//!
//! Checks run in a fixed order:
//!
//! 1. partial fraction decomposition of `8x²/(1 − 4x²)` at five points;
//! 2. tangent-series enclosure over `x ∈ {0, 0.05, …, 0.45}`, one row per
//!    truncation level reporting the grid point closest to failing;
//! 3. Euler–Maclaurin identity for `n <= 200`, worst `n`;
//! 4. sawtooth integral vs. quadrature of the combined integrand;
//! 5. the three routes to `ln √(2π) − 1` against the closed form;
//! 6. `∫₀^{1/2} ln cos(πx) dx = −ln √2`;
//! 7. the double-angle relation;
//! 8. the ε-identity at `ε ∈ {0.1, 0.25, 0.4}`.

use chrono::{SecondsFormat, Utc};
use serde::Serialize;

use crate::closed_forms::ClosedForms;
use crate::constant_chain::{self, MIN_SAWTOOTH_T, QUADRATURE_MIN_TOLERANCE, SEAM_DELTA};
use crate::em_factorial::{self, MAX_N};
use crate::error::{check_tolerance, Error, Result};
use crate::logcos::{self, DOUBLE_ANGLE_MIN_TOLERANCE};
use crate::quadrature;
use crate::report::IdentityReport;
use crate::tangent_series::{self, MAX_TERMS};

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_SERIES_N: u64 = 100_000;
pub const DEFAULT_SAWTOOTH_T: u64 = 10_000;

pub const DECOMPOSITION_POINTS: [f64; 5] = [0.0, 0.1, 0.25, 0.4, 0.499];
pub const TANGENT_TRUNCATIONS: [u64; 4] = [10, 100, 1_000, 10_000];
pub const EM_SWEEP_MAX_N: u64 = 200;
pub const EPSILON_POINTS: [f64; 3] = [0.1, 0.25, 0.4];

/// `x = 0, 0.05, …, 0.45`.
pub fn tangent_grid() -> Vec<f64> {
    (0..10).map(|k| f64::from(k) * 0.05).collect()
}

/// User-facing knobs of the suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub tol: f64,
    pub series_n: u64,
    pub sawtooth_t: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOLERANCE,
            series_n: DEFAULT_SERIES_N,
            sawtooth_t: DEFAULT_SAWTOOTH_T,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        check_tolerance(self.tol, quadrature::MIN_TOLERANCE)?;
        if self.tol > 1e-2 {
            return Err(Error::Domain {
                what: "tol",
                value: self.tol,
                domain: "[1e-14, 1e-2]",
            });
        }
        if !(2..=MAX_TERMS).contains(&self.series_n) {
            return Err(Error::Domain {
                what: "series-n",
                value: self.series_n as f64,
                domain: "[2, 1e8]",
            });
        }
        if !(MIN_SAWTOOTH_T..=MAX_N).contains(&self.sawtooth_t) {
            return Err(Error::Domain {
                what: "sawtooth-t",
                value: self.sawtooth_t as f64,
                domain: "[10, 1e6]",
            });
        }
        Ok(())
    }

    /// Tolerances actually handed to each check. Checks with a precision
    /// floor above `tol` run at their floor.
    pub fn effective(&self) -> ConfigEcho {
        ConfigEcho {
            tol: self.tol,
            series_n: self.series_n,
            sawtooth_t: self.sawtooth_t,
            quadrature_tol: self.tol.max(QUADRATURE_MIN_TOLERANCE),
            log_cos_tol: self.tol.max(logcos::MIN_TOLERANCE),
            double_angle_tol: self.tol.max(DOUBLE_ANGLE_MIN_TOLERANCE),
            epsilon_tol: self.tol,
            decomposition_points: DECOMPOSITION_POINTS.to_vec(),
            tangent_grid: tangent_grid(),
            tangent_truncations: TANGENT_TRUNCATIONS.to_vec(),
            em_sweep_max_n: EM_SWEEP_MAX_N,
            epsilon_points: EPSILON_POINTS.to_vec(),
            seam_delta: SEAM_DELTA,
            log_sin_split: logcos::DEFAULT_SPLIT,
        }
    }
}

/// Echo of every tolerance and truncation level a run used.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub tol: f64,
    pub series_n: u64,
    pub sawtooth_t: u64,
    pub quadrature_tol: f64,
    pub log_cos_tol: f64,
    pub double_angle_tol: f64,
    pub epsilon_tol: f64,
    pub decomposition_points: Vec<f64>,
    pub tangent_grid: Vec<f64>,
    pub tangent_truncations: Vec<u64>,
    pub em_sweep_max_n: u64,
    pub epsilon_points: Vec<f64>,
    pub seam_delta: f64,
    pub log_sin_split: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationSuiteReport {
    pub reports: Vec<IdentityReport>,
    pub generated_at: String,
    pub overall_pass: bool,
    pub config: ConfigEcho,
}

impl VerificationSuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| !r.pass)
    }
}

/// The labelled report using the largest share of its tolerance; the first
/// one wins ties.
fn worst<L>(rows: Vec<(L, IdentityReport)>) -> Option<(L, IdentityReport)> {
    rows.into_iter().reduce(|a, b| {
        if b.1.tolerance_ratio() > a.1.tolerance_ratio() {
            b
        } else {
            a
        }
    })
}

/// Runs every check with the standard closed forms.
pub fn run(config: &SuiteConfig) -> Result<VerificationSuiteReport> {
    run_with(config, &ClosedForms::STANDARD)
}

/// Runs every check against `forms`. A check that cannot be completed
/// (for instance a quadrature that does not converge) is an error.
pub fn run_with(config: &SuiteConfig, forms: &ClosedForms) -> Result<VerificationSuiteReport> {
    config.validate()?;
    let echo = config.effective();
    let mut reports = Vec::new();

    for &x in &DECOMPOSITION_POINTS {
        reports.push(constant_chain::decomposition_check_with(x, forms)?);
    }

    for &n in &TANGENT_TRUNCATIONS {
        let rows = echo
            .tangent_grid
            .iter()
            .map(|&x| Ok((x, tangent_series::enclosure_check_with(x, n, forms)?)))
            .collect::<Result<Vec<_>>>()?;
        let (x, mut row) = worst(rows).expect("non-empty grid");
        row.name = format!("tangent_enclosure(N={n}, worst x={x})");
        reports.push(row);
    }

    let em_rows = (1..=EM_SWEEP_MAX_N)
        .map(|n| {
            let direct = em_factorial::log_factorial_direct(n)?;
            let em = em_factorial::log_factorial_em_with(n, forms)?;
            Ok((
                n,
                IdentityReport::new("", em, direct, 1e-11 * direct.abs().max(1.0)),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let (n, mut row) = worst(em_rows).expect("non-empty sweep");
    row.name = format!("em_identity(n<={EM_SWEEP_MAX_N}, worst n={n})");
    reports.push(row);

    reports.push(constant_chain::identity_eq4_check_with(
        config.sawtooth_t,
        echo.quadrature_tol,
        forms,
    )?);

    let closed = (forms.stirling_constant)();
    let q = constant_chain::constant_via_quadrature_with(echo.quadrature_tol, forms)?
        .require_converged(echo.quadrature_tol)?;
    reports.push(IdentityReport::new(
        "constant_quadrature",
        q.value,
        closed,
        echo.quadrature_tol + q.error_estimate,
    ));
    let series_tail = (forms.constant_series_tail_bracket)(config.series_n)?;
    reports.push(IdentityReport::new(
        format!("constant_series(N={})", config.series_n),
        constant_chain::constant_series_partial_with(config.series_n, forms)?
            + series_tail.midpoint(),
        closed,
        config.tol + series_tail.half_width(),
    ));
    let sawtooth_tail = (forms.constant_series_tail_bracket)(config.sawtooth_t)?;
    reports.push(IdentityReport::new(
        format!("constant_sawtooth(T={})", config.sawtooth_t),
        em_factorial::sawtooth_integral_with(config.sawtooth_t, forms)? + sawtooth_tail.midpoint(),
        closed,
        config.tol + sawtooth_tail.half_width(),
    ));

    let lc = logcos::log_cos_integral_with(echo.log_cos_tol, logcos::DEFAULT_SPLIT, forms)?
        .require_converged(echo.log_cos_tol)?;
    reports.push(IdentityReport::new(
        "log_cos_integral",
        lc.value,
        logcos::log_cos_integral_exact(),
        2.0 * echo.log_cos_tol,
    ));

    reports.push(logcos::double_angle_check_with(
        echo.double_angle_tol,
        logcos::DEFAULT_SPLIT,
        forms,
    )?);

    for &eps in &EPSILON_POINTS {
        reports.push(constant_chain::epsilon_identity_check(
            eps,
            echo.epsilon_tol,
        )?);
    }

    let overall_pass = reports.iter().all(|r| r.pass);
    Ok(VerificationSuiteReport {
        reports,
        generated_at: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
        overall_pass,
        config: echo,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_config() {
        let bad = [
            SuiteConfig {
                tol: 1e-15,
                ..Default::default()
            },
            SuiteConfig {
                tol: 0.5,
                ..Default::default()
            },
            SuiteConfig {
                tol: f64::NAN,
                ..Default::default()
            },
            SuiteConfig {
                series_n: 1,
                ..Default::default()
            },
            SuiteConfig {
                sawtooth_t: 9,
                ..Default::default()
            },
        ];
        for c in bad {
            assert!(run(&c).is_err(), "{c:?}");
        }
    }

    #[test]
    fn tolerance_floors() {
        let echo = SuiteConfig {
            tol: 1e-13,
            ..Default::default()
        }
        .effective();
        assert_eq!(echo.quadrature_tol, 1e-12);
        assert_eq!(echo.log_cos_tol, 1e-10);
        assert_eq!(echo.double_angle_tol, 1e-8);
        assert_eq!(echo.epsilon_tol, 1e-13);
    }

    #[test]
    fn worst_picks_largest_ratio() {
        let rows = vec![
            (1, IdentityReport::new("a", 0.0, 1e-9, 1e-8)),
            (2, IdentityReport::new("b", 0.0, 5e-9, 1e-8)),
            (3, IdentityReport::new("c", 0.0, 0.0, 0.0)),
        ];
        assert_eq!(worst(rows).unwrap().0, 2);
    }
}
