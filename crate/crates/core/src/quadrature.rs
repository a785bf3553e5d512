//! Adaptive Gauss–Kronrod integration on finite intervals.
//!
//! Each subinterval is integrated with the 7-point Gauss / 15-point Kronrod
//! pair; the difference between the two rules, rescaled the same way
//! QUADPACK does, is the local error estimate. The subinterval with the
//! largest estimate is bisected until the summed estimate meets the
//! requested absolute tolerance or the evaluation budget is spent.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{check_tolerance, Error, Result};
use crate::summation::CompensatedSum;

/// Smallest absolute tolerance accepted by [`integrate`].
pub const MIN_TOLERANCE: f64 = 1e-14;

/// Default cap on integrand evaluations.
pub const DEFAULT_MAX_EVALUATIONS: usize = 1_000_000;

const KRONROD_POINTS: usize = 15;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadratureResult {
    /// Adds two results over adjoining pieces of a split integral.
    ///
    /// The sum is marked converged only if both parts converged and the
    /// combined estimate still satisfies `tol`.
    pub fn combine(self, other: Self, tol: f64) -> Self {
        let error_estimate = self.error_estimate + other.error_estimate;
        Self {
            value: self.value + other.value,
            error_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged && error_estimate <= tol,
        }
    }

    /// Turns a non-converged result into [`Error::NotConverged`].
    pub fn require_converged(self, tol: f64) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged {
                error_estimate: self.error_estimate,
                tol,
                evaluations: self.evaluations,
            })
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    /// The error estimate is the rounding floor, which bisection cannot
    /// lower.
    roundoff_limited: bool,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    // Max-heap order: largest error first, ties go to the leftmost segment.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// QUADPACK's error rescaling. Also reports whether the rounding floor
/// `50·eps·∫|f|` is what determined the estimate.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> (f64, bool) {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let floor = 50.0 * f64::EPSILON * res_abs;
        if floor >= scaled {
            return (floor, true);
        }
    }
    (scaled, false)
}

fn eval<F>(f: &mut F, x: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let y = f(x)?;
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite { x, value: y })
    }
}

fn gauss_kronrod_15<F>(f: &mut F, a: f64, b: f64) -> Result<Segment>
where
    F: FnMut(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = eval(f, center)?;

    let mut res_gauss = f_center * WG[3];
    let mut res_kronrod = f_center * WGK[7];
    let mut res_abs = res_kronrod.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(f, center - dx)?;
        let f2 = eval(f, center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        // Gauss nodes sit at the odd Kronrod indices.
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let scale = half.abs();
    let err = (res_kronrod - res_gauss) * half;
    let (error, roundoff_limited) = rescale_error(err, res_abs * scale, res_asc * scale);
    Ok(Segment {
        a,
        b,
        value: res_kronrod * half,
        error,
        roundoff_limited,
    })
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Uses the default budget of [`DEFAULT_MAX_EVALUATIONS`]. Running out of
/// budget is not an error: the best available estimate is returned with
/// `converged == false`. The same holds when `tol` is below the rounding
/// floor `50·eps·∫|f|` of the rule; refinement then stops early.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    integrate_with_budget(|x| Ok(f(x)), a, b, tol, DEFAULT_MAX_EVALUATIONS)
}

/// Like [`integrate`], for integrands that can fail.
pub fn try_integrate<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    integrate_with_budget(f, a, b, tol, DEFAULT_MAX_EVALUATIONS)
}

pub fn integrate_with_budget<F>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    max_evaluations: usize,
) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    check_tolerance(tol, MIN_TOLERANCE)?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::Domain {
            what: "interval length",
            value: b - a,
            domain: "finite a < b",
        });
    }
    if max_evaluations < KRONROD_POINTS {
        return Err(Error::Budget {
            what: "max_evaluations",
            requested: max_evaluations as u64,
            limit: KRONROD_POINTS as u64,
        });
    }

    let first = gauss_kronrod_15(&mut f, a, b)?;
    let mut evaluations = KRONROD_POINTS;
    let mut heap = BinaryHeap::new();
    // Segments too narrow to bisect further, or whose estimate is already
    // the rounding floor; kept out of the refinement queue.
    let mut frozen = Vec::new();
    let mut total_error = first.error;
    heap.push(first);

    loop {
        if total_error <= tol {
            // Re-sum to shed drift from the running updates.
            total_error = heap.iter().chain(&frozen).map(|s| s.error).sum();
            if total_error <= tol {
                break;
            }
        }
        if evaluations + 2 * KRONROD_POINTS > max_evaluations {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if worst.roundoff_limited || !(worst.a < mid && mid < worst.b) {
            frozen.push(worst);
            continue;
        }
        let left = gauss_kronrod_15(&mut f, worst.a, mid)?;
        let right = gauss_kronrod_15(&mut f, mid, worst.b)?;
        evaluations += 2 * KRONROD_POINTS;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    let mut segments: Vec<Segment> = heap.into_vec();
    segments.extend(frozen);
    segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value = segments
        .iter()
        .map(|s| s.value)
        .collect::<CompensatedSum>()
        .value();
    let error_estimate: f64 = segments.iter().map(|s| s.error).sum();

    Ok(QuadratureResult {
        value,
        error_estimate,
        evaluations,
        converged: error_estimate <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_and_constant() {
        let r = integrate(|x| x * x, 0.0, 1.0, 1e-12).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0 / 3.0).abs() < 1e-15);
        let r = integrate(|_| 1.0, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15);
        assert!(r.evaluations >= 1);
    }

    #[test]
    fn tangent_partial_fraction_term() {
        // Antiderivative −ln(1/4 − x²): ln((1/4)/(0.09)) = ln(25/9).
        let r = integrate(|x| 2.0 * x / (0.25 - x * x), 0.0, 0.4, 1e-12).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.021_651_247_531_981_4).abs() <= r.error_estimate.max(1e-15));
        // 1/(1/4 − x²) has antiderivative ln((1/2 + x)/(1/2 − x)), giving ln 9.
        let r = integrate(|x| 1.0 / (0.25 - x * x), 0.0, 0.4, 1e-12).unwrap();
        assert!((r.value - 2.197_224_577_336_219_4).abs() <= r.error_estimate.max(1e-14));
    }

    #[test]
    fn nonfinite_integrand_reports_abscissa() {
        let err = integrate(|x| if x > 0.7 { f64::NAN } else { x }, 0.0, 1.0, 1e-10).unwrap_err();
        match err {
            Error::NonFinite { x, value } => {
                assert!(x > 0.7 && x <= 1.0);
                assert!(value.is_nan());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(matches!(
            integrate(|x| x, 0.0, 1.0, 1e-15),
            Err(Error::ToleranceTooSmall { .. })
        ));
        assert!(matches!(
            integrate(|x| x, 0.0, 1.0, 0.0),
            Err(Error::InvalidTolerance(_))
        ));
        assert!(matches!(
            integrate(|x| x, 0.0, 1.0, f64::NAN),
            Err(Error::InvalidTolerance(_))
        ));
        assert!(matches!(
            integrate(|x| x, 1.0, 1.0, 1e-8),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            integrate(|x| x, 2.0, 1.0, 1e-8),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn budget_exhaustion_is_not_an_error() {
        // 1/sqrt(x) has an integrable singularity the GK rule never samples.
        let r = integrate_with_budget(|x| Ok(1.0 / x.sqrt()), 0.0, 1.0, 1e-14, 200).unwrap();
        assert!(!r.converged);
        assert!(r.evaluations <= 200);
        assert!(r.require_converged(1e-14).is_err());
    }

    #[test]
    fn deterministic() {
        let f = |x: f64| (10.0 * x).sin() * (-x).exp();
        let a = integrate(f, 0.0, PI, 1e-13).unwrap();
        let b = integrate(f, 0.0, PI, 1e-13).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ties_refine_leftmost_first() {
        let mut heap = BinaryHeap::new();
        for a in [0.5, 0.0, 0.25] {
            heap.push(Segment {
                a,
                b: a + 0.25,
                value: 0.0,
                error: 1.0,
                roundoff_limited: false,
            });
        }
        heap.push(Segment {
            a: 0.75,
            b: 1.0,
            value: 0.0,
            error: 0.5,
            roundoff_limited: false,
        });
        let order: Vec<f64> = std::iter::from_fn(|| heap.pop()).map(|s| s.a).collect();
        assert_eq!(order, vec![0.0, 0.25, 0.5, 0.75]);
    }

    #[test]
    fn combine_tracks_tolerance() {
        let p = QuadratureResult {
            value: 1.0,
            error_estimate: 6e-9,
            evaluations: 15,
            converged: true,
        };
        let c = p.combine(p, 1e-8);
        assert_eq!(c.value, 2.0);
        assert_eq!(c.evaluations, 30);
        assert!(!c.converged);
        assert!(p.combine(p, 2e-8).converged);
    }
}
