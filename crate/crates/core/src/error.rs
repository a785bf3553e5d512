use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("pole at x = {x}")]
    Pole { x: f64 },

    #[error("tolerance must be a positive finite number, got {0}")]
    InvalidTolerance(f64),

    #[error("tolerance {tol:e} is below the supported floor {floor:e}")]
    ToleranceTooSmall { tol: f64, floor: f64 },

    #[error("integrand returned {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },

    #[error("{what} = {requested} exceeds the budget of {limit}")]
    Budget {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error(
        "quadrature did not converge: error estimate {error_estimate:e} above \
         tolerance {tol:e} after {evaluations} evaluations"
    )]
    NotConverged {
        error_estimate: f64,
        tol: f64,
        evaluations: usize,
    },
}

/// Validates `tol` as a finite positive number no smaller than `floor`.
pub(crate) fn check_tolerance(tol: f64, floor: f64) -> Result<()> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    if tol < floor {
        return Err(Error::ToleranceTooSmall { tol, floor });
    }
    Ok(())
}
