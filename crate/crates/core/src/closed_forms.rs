//! The table of closed forms the composite checks are built from, and a
//! set of deliberately wrong variants for mutation testing the harness.

use serde::Serialize;

use crate::bracket::BracketedValue;
use crate::constant_chain;
use crate::em_factorial;
use crate::error::Result;
use crate::logcos;
use crate::tangent_series;

/// Function table consulted by every `*_with` operation.
#[derive(Debug, Clone, Copy)]
pub struct ClosedForms {
    pub stirling_constant: fn() -> f64,
    pub sawtooth_unit_integral: fn(u64) -> f64,
    pub constant_series_term: fn(u64) -> Result<f64>,
    pub constant_series_tail_bracket: fn(u64) -> Result<BracketedValue>,
    pub tan_pf_tail_bracket: fn(f64, u64) -> Result<BracketedValue>,
    pub combined_integrand: fn(f64) -> Result<f64>,
    pub partial_fraction_form: fn(f64) -> f64,
    pub log_sin_leading_piece: fn(f64) -> f64,
}

impl ClosedForms {
    pub const STANDARD: Self = Self {
        stirling_constant: constant_chain::stirling_constant_closed,
        sawtooth_unit_integral: em_factorial::sawtooth_unit_integral,
        constant_series_term: constant_chain::constant_series_term,
        constant_series_tail_bracket: constant_chain::constant_series_tail_bracket,
        tan_pf_tail_bracket: tangent_series::tan_pf_tail_bracket,
        combined_integrand: constant_chain::combined_integrand,
        partial_fraction_form: constant_chain::partial_fraction_form,
        log_sin_leading_piece: logcos::log_sin_leading_piece,
    };

    /// The standard table with one entry replaced by a plausible bug.
    pub fn with_fault(fault: Fault) -> Self {
        let mut forms = Self::STANDARD;
        match fault {
            // Square root dropped.
            Fault::StirlingConstant => {
                forms.stirling_constant = || std::f64::consts::TAU.ln() - 1.0;
            }
            // Weight ν + 1/2 instead of ν + 3/2.
            Fault::SawtoothUnitIntegral => {
                forms.sawtooth_unit_integral = |nu| {
                    let v = nu as f64;
                    1.0 - (v + 0.5) * ((v + 2.0) / (v + 1.0)).ln()
                };
            }
            // Ratio taken one index too far.
            Fault::SeriesTerm => {
                forms.constant_series_term = |nu| {
                    let v = nu as f64;
                    Ok(1.0 - (v + 0.5) * ((v + 2.0) / (v + 1.0)).ln())
                };
            }
            // Tail forgotten.
            Fault::SeriesTailBracket => {
                forms.constant_series_tail_bracket = |_| Ok(BracketedValue::point(0.0));
            }
            // Upper bound shifted onto the lower one.
            Fault::TangentTailBracket => {
                forms.tan_pf_tail_bracket = |x, n| {
                    let lower = tangent_series::tan_pf_tail_bracket(x, n)?.lower();
                    Ok(BracketedValue::point(lower))
                };
            }
            Fault::CombinedIntegrand => {
                forms.combined_integrand = constant_chain::combined_integrand_flipped_laurent;
            }
            // Constant term −1 instead of −2.
            Fault::PartialFractionForm => {
                forms.partial_fraction_form =
                    |x| 1.0 / (1.0 + 2.0 * x) + 1.0 / (1.0 - 2.0 * x) - 1.0;
            }
            // The −δ from integrating ln t dropped.
            Fault::LogSinLeadingPiece => {
                forms.log_sin_leading_piece = |d| d * (std::f64::consts::PI * d).ln();
            }
        }
        forms
    }
}

impl Default for ClosedForms {
    fn default() -> Self {
        Self::STANDARD
    }
}

/// A closed form that can be swapped for a wrong variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    StirlingConstant,
    SawtoothUnitIntegral,
    SeriesTerm,
    SeriesTailBracket,
    TangentTailBracket,
    CombinedIntegrand,
    PartialFractionForm,
    LogSinLeadingPiece,
}

impl Fault {
    pub const ALL: [Fault; 8] = [
        Fault::StirlingConstant,
        Fault::SawtoothUnitIntegral,
        Fault::SeriesTerm,
        Fault::SeriesTailBracket,
        Fault::TangentTailBracket,
        Fault::CombinedIntegrand,
        Fault::PartialFractionForm,
        Fault::LogSinLeadingPiece,
    ];
}
