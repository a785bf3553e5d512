//! Numerical verification of an elementary route to Stirling's formula
//! `n! ∼ nⁿ e⁻ⁿ √(2πn)`.
//!
//! The crate evaluates, with error control, every identity on the way from
//! the Euler–Maclaurin form of `ln n!` to the constant `ln √(2π) − 1`:
//!
//! * [`em_factorial`]: the exact Euler–Maclaurin identity for `ln n!` and
//!   the Stirling ratio;
//! * [`tangent_series`]: the partial fraction expansion of `π tan(πx)` with
//!   rigorous tail brackets;
//! * [`constant_chain`]: three independent routes to `ln √(2π) − 1`;
//! * [`logcos`]: `∫₀^{1/2} ln cos(πx) dx = −ln √2` and the double-angle
//!   relation behind it;
//! * [`quadrature`]: the adaptive Gauss–Kronrod engine the integrals use;
//! * [`suite`] and [`cli`]: the aggregated checks and the `stirling-lab`
//!   command.

pub mod bracket;
pub mod cli;
pub mod closed_forms;
pub mod constant_chain;
pub mod em_factorial;
pub mod error;
pub mod format;
pub mod logcos;
pub mod quadrature;
pub mod report;
pub mod suite;
pub mod summation;
pub mod tangent_series;

pub use bracket::BracketedValue;
pub use closed_forms::{ClosedForms, Fault};
pub use em_factorial::ConvergenceRow;
pub use error::{Error, Result};
pub use quadrature::QuadratureResult;
pub use report::IdentityReport;
pub use suite::{SuiteConfig, VerificationSuiteReport};
