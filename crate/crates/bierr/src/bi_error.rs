//! The combined error curve `zeta(c) = alpha(c) + beta(c)` of a
//! one-sided test and the threshold that minimizes it.
//!
//! For an upper-tail test that rejects when the statistic exceeds `c`,
//! `alpha(c) = 1 - F0(c)` and `beta(c) = FA(c)`. When the two sampling
//! distributions are equal-scale symmetric members of one location
//! family, the minimizer has the closed form `(mu0 + muA) / 2`;
//! otherwise a grid scan plus golden-section refinement finds it
//! numerically.

use crate::dist::DistributionSpec;
use crate::error::{Error, Result};

/// Tail direction of the test: which side of the threshold rejects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    Upper,
    Lower,
}

/// Null and alternative sampling distributions with a tail direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypothesisPair {
    null: DistributionSpec,
    alt: DistributionSpec,
    tail: Tail,
}

impl HypothesisPair {
    /// Validates that the alternative lies on the rejection side of the
    /// null (locations for the real-line families, noncentrality for F)
    /// and that both distributions live on the same support.
    pub fn new(null: DistributionSpec, alt: DistributionSpec, tail: Tail) -> Result<Self> {
        null.validate()?;
        alt.validate()?;
        match (null.location_scale(), alt.location_scale()) {
            (Some((mu0, _)), Some((mu_a, _))) => {
                let ordered = match tail {
                    Tail::Upper => mu_a >= mu0,
                    Tail::Lower => mu_a <= mu0,
                };
                if !ordered {
                    return Err(Error::domain(format!(
                        "{:?}-tail pair requires the alternative location on the rejection side: mu0={mu0}, muA={mu_a}",
                        tail
                    )));
                }
            }
            (None, None) => {
                let (
                    DistributionSpec::FisherF {
                        noncentrality: l0, ..
                    },
                    DistributionSpec::FisherF {
                        noncentrality: la, ..
                    },
                ) = (&null, &alt)
                else {
                    unreachable!("only F lacks a location");
                };
                let ordered = match tail {
                    Tail::Upper => la >= l0,
                    Tail::Lower => la <= l0,
                };
                if !ordered {
                    return Err(Error::domain(format!(
                        "{tail:?}-tail F pair requires ordered noncentralities: lambda0={l0}, lambdaA={la}"
                    )));
                }
            }
            _ => {
                return Err(Error::domain(format!(
                    "mixed supports: {} vs {}",
                    null.kind_name(),
                    alt.kind_name()
                )));
            }
        }
        Ok(HypothesisPair { null, alt, tail })
    }

    pub fn null_dist(&self) -> &DistributionSpec {
        &self.null
    }

    pub fn alt_dist(&self) -> &DistributionSpec {
        &self.alt
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }
}

/// Type I, Type II, and combined error at one threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorProfile {
    pub alpha: f64,
    pub beta: f64,
    pub zeta: f64,
}

impl ErrorProfile {
    fn from_components(alpha: f64, beta: f64) -> Self {
        ErrorProfile {
            alpha,
            beta,
            zeta: alpha + beta,
        }
    }
}

/// How a threshold was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdMethod {
    ClosedForm,
    Numeric,
}

/// A decision threshold with its error profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdResult {
    pub threshold: f64,
    pub profile: ErrorProfile,
    pub method: ThresholdMethod,
    /// Refinement iterations (numeric method only; 0 for closed form).
    pub iterations: u32,
    /// Set when the pair is degenerate (null equals alternative), where
    /// every threshold gives `zeta = 1` and the result is not useful.
    pub degenerate: bool,
}

/// Theorem preconditions for the closed-form threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem1Report {
    pub symmetric: bool,
    pub tail_decreasing: bool,
    pub equal_scale: bool,
}

impl Theorem1Report {
    pub fn holds(&self) -> bool {
        self.symmetric && self.tail_decreasing && self.equal_scale
    }
}

/// Evaluate the error profile of threshold `c`.
pub fn bi_error(pair: &HypothesisPair, c: f64) -> Result<ErrorProfile> {
    if !c.is_finite() {
        return Err(Error::domain(format!("threshold must be finite, got {c}")));
    }
    Ok(bi_error_raw(pair, c))
}

fn bi_error_raw(pair: &HypothesisPair, c: f64) -> ErrorProfile {
    // tail components come from the survival function directly, so
    // widely separated pairs keep full precision near the minimum
    match pair.tail {
        Tail::Upper => ErrorProfile::from_components(pair.null.sf_raw(c), pair.alt.cdf_raw(c)),
        Tail::Lower => ErrorProfile::from_components(pair.null.cdf_raw(c), pair.alt.sf_raw(c)),
    }
}

/// Check the closed-form preconditions: both distributions symmetric
/// and tail-decreasing (from the kind, spot-checked numerically) and of
/// equal shape/scale (same kind, same scale, densities agree after a
/// location shift).
pub fn check_theorem1(pair: &HypothesisPair) -> Theorem1Report {
    let symmetric = pair.null.is_symmetric() && pair.alt.is_symmetric();

    let tail_decreasing = symmetric && {
        [&pair.null, &pair.alt].iter().all(|spec| {
            let (location, scale) = spec.location_scale().expect("symmetric implies location");
            let mut previous = f64::INFINITY;
            (0..12).all(|i| {
                let value = spec.pdf_raw(location + scale * (0.4 * f64::from(i)));
                let ok = value < previous;
                previous = value;
                ok
            })
        })
    };

    let equal_scale = symmetric && {
        let same_kind = std::mem::discriminant(&pair.null) == std::mem::discriminant(&pair.alt);
        let (_, s0) = pair.null.location_scale().unwrap_or((0.0, f64::NAN));
        let (_, sa) = pair.alt.location_scale().unwrap_or((0.0, f64::NAN));
        same_kind && s0 == sa && shifted_densities_agree(&pair.null, &pair.alt)
    };

    Theorem1Report {
        symmetric,
        tail_decreasing,
        equal_scale,
    }
}

/// Numeric spot check that `fA(x) = f0(x - delta)`: catches pairs that
/// share a scale value but not a shape (e.g. differing degrees of
/// freedom).
fn shifted_densities_agree(null: &DistributionSpec, alt: &DistributionSpec) -> bool {
    let (mu0, s0) = match null.location_scale() {
        Some(v) => v,
        None => return false,
    };
    let (mu_a, _) = match alt.location_scale() {
        Some(v) => v,
        None => return false,
    };
    (-6..=6).all(|i| {
        let offset = s0 * 0.5 * f64::from(i);
        let f0 = null.pdf_raw(mu0 + offset);
        let fa = alt.pdf_raw(mu_a + offset);
        (f0 - fa).abs() <= 1e-12 * f0.max(fa).max(1e-30)
    })
}

/// Closed-form minimizing threshold `(mu0 + muA) / 2` for symmetric,
/// tail-decreasing, equal-scale location pairs.
///
/// A degenerate pair (`muA == mu0`) is reported with the flag set
/// rather than rejected: its threshold sits at `mu0` where
/// `zeta = 1`, which is exactly the pathology worth surfacing.
pub fn youden_closed_form(pair: &HypothesisPair) -> Result<ThresholdResult> {
    let report = check_theorem1(pair);
    if !report.holds() {
        return Err(Error::TheoremInapplicable(format!(
            "pair is not a symmetric equal-scale location pair (symmetric: {}, tail_decreasing: {}, equal_scale: {})",
            report.symmetric, report.tail_decreasing, report.equal_scale
        )));
    }
    let (mu0, _) = pair.null.location_scale().expect("location family");
    let (mu_a, _) = pair.alt.location_scale().expect("location family");
    let threshold = 0.5 * (mu0 + mu_a);
    Ok(ThresholdResult {
        threshold,
        profile: bi_error_raw(pair, threshold),
        method: ThresholdMethod::ClosedForm,
        iterations: 0,
        degenerate: mu0 == mu_a,
    })
}

/// Number of intervals in the coarse scan that locates the basin of the
/// global minimum before golden-section refinement.
const SCAN_INTERVALS: usize = 1024;

/// Default refinement tolerance on the threshold.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Minimize `zeta` numerically over the bracket
/// `[quantile(f0, 1e-6), quantile(fA, 1 - 1e-6)]` (mirrored for a
/// lower-tail pair): a coarse scan over [`SCAN_INTERVALS`] + 1 points
/// finds the best basin (ties resolved toward the smallest threshold),
/// then golden-section search narrows it to `tol`.
pub fn youden_numeric(pair: &HypothesisPair, tol: f64) -> Result<ThresholdResult> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::domain(format!("tol must be positive, got {tol}")));
    }
    let (lo, hi) = match pair.tail {
        Tail::Upper => (
            pair.null.quantile_raw(1e-6),
            pair.alt.quantile_raw(1.0 - 1e-6),
        ),
        Tail::Lower => (
            pair.alt.quantile_raw(1e-6),
            pair.null.quantile_raw(1.0 - 1e-6),
        ),
    };
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::numeric(format!(
            "degenerate search bracket [{lo}, {hi}]"
        )));
    }

    let objective = |c: f64| bi_error_raw(pair, c).zeta;

    // coarse scan
    let step = (hi - lo) / SCAN_INTERVALS as f64;
    let mut best_index = 0;
    let mut best_value = f64::INFINITY;
    let mut worst_value = f64::NEG_INFINITY;
    for i in 0..=SCAN_INTERVALS {
        let c = lo + step * i as f64;
        let z = objective(c);
        if !z.is_finite() {
            return Err(Error::numeric(format!("zeta is not finite at c = {c}")));
        }
        if z < best_value {
            best_value = z;
            best_index = i;
        }
        worst_value = worst_value.max(z);
    }
    let flat = (worst_value - best_value).abs() <= 1e-12;

    // golden-section refinement inside the winning basin
    let mut a = lo + step * best_index.saturating_sub(1) as f64;
    let mut b = (lo + step * (best_index + 1) as f64).min(hi);
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = objective(x1);
    let mut f2 = objective(x2);
    let mut iterations = 0u32;
    while (b - a) > tol && iterations < 200 {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = objective(x2);
        }
        iterations += 1;
    }
    let threshold = if f1 <= f2 { x1 } else { x2 };
    // keep the scan winner if refinement drifted upward on a flat stretch
    let threshold = if objective(threshold) <= best_value {
        threshold
    } else {
        lo + step * best_index as f64
    };
    Ok(ThresholdResult {
        threshold,
        profile: bi_error_raw(pair, threshold),
        method: ThresholdMethod::Numeric,
        iterations,
        degenerate: flat,
    })
}

/// Prior-weighted threshold on the standardized statistic scale:
/// `delta/2 + s^2 ln(p1 / (1 - p1)) / delta`.
///
/// With an indifferent prior (`p1 = 0.5`) the log term vanishes and the
/// threshold is the plain midpoint `delta / 2`.
pub fn weighted_threshold(delta: f64, s: f64, p1: f64) -> Result<f64> {
    if delta == 0.0 || !delta.is_finite() {
        return Err(Error::domain(format!(
            "weighted threshold requires delta != 0, got {delta}"
        )));
    }
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::domain(format!(
            "weighted threshold requires s > 0, got {s}"
        )));
    }
    if !(p1 > 0.0 && p1 < 1.0) {
        return Err(Error::domain(format!(
            "weighted threshold requires p1 in (0, 1), got {p1}"
        )));
    }
    Ok(delta / 2.0 + s * s * (p1 / (1.0 - p1)).ln() / delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::erf;

    fn normal_pair(mu0: f64, mu_a: f64, sd: f64) -> HypothesisPair {
        HypothesisPair::new(
            DistributionSpec::normal(mu0, sd).unwrap(),
            DistributionSpec::normal(mu_a, sd).unwrap(),
            Tail::Upper,
        )
        .unwrap()
    }

    fn f_pair(d1: u32, d2: u32, lambda: f64) -> HypothesisPair {
        HypothesisPair::new(
            DistributionSpec::fisher_f(d1, d2, 0.0).unwrap(),
            DistributionSpec::fisher_f(d1, d2, lambda).unwrap(),
            Tail::Upper,
        )
        .unwrap()
    }

    /// Standard normal CDF used as the test-side oracle.
    fn phi(z: f64) -> f64 {
        0.5 * (1.0 + erf(z / std::f64::consts::SQRT_2))
    }

    #[test]
    fn pair_validation_orders_the_alternative() {
        let n0 = DistributionSpec::normal(1.0, 1.0).unwrap();
        let n1 = DistributionSpec::normal(0.0, 1.0).unwrap();
        assert!(HypothesisPair::new(n0, n1, Tail::Upper).is_err());
        assert!(HypothesisPair::new(n0, n1, Tail::Lower).is_ok());
        let f0 = DistributionSpec::fisher_f(4, 4, 5.0).unwrap();
        let f1 = DistributionSpec::fisher_f(4, 4, 1.0).unwrap();
        assert!(HypothesisPair::new(f0, f1, Tail::Upper).is_err());
        assert!(HypothesisPair::new(n0, f0, Tail::Upper).is_err());
    }

    #[test]
    fn bi_error_matches_normal_oracle_at_midpoint() {
        // at the midpoint of N(0,1) vs N(1,1), alpha = beta = Phi(-1/2)
        let pair = normal_pair(0.0, 1.0, 1.0);
        let profile = bi_error(&pair, 0.5).unwrap();
        let expected = phi(-0.5);
        assert!((profile.alpha - expected).abs() <= 1e-14);
        assert!((profile.beta - expected).abs() <= 1e-14);
        assert!((profile.zeta - 2.0 * expected).abs() <= 1e-14);
        assert!((profile.zeta - 0.6170750774519738).abs() <= 1e-12);
    }

    #[test]
    fn bi_error_limits() {
        let pair = normal_pair(0.0, 1.0, 1.0);
        let far_left = bi_error(&pair, -1e9).unwrap();
        assert_eq!(far_left.alpha, 1.0);
        assert_eq!(far_left.beta, 0.0);
        assert_eq!(far_left.zeta, 1.0);
        let far_right = bi_error(&pair, 1e9).unwrap();
        assert_eq!(far_right.alpha, 0.0);
        assert_eq!(far_right.beta, 1.0);
        assert!(bi_error(&pair, f64::INFINITY).is_err());
    }

    #[test]
    fn bi_error_at_the_conventional_f_threshold() {
        // F(10,10,0) vs F(10,10,10) at the 0.95 null quantile
        let pair = f_pair(10, 10, 10.0);
        let c = pair.null_dist().quantile(0.95).unwrap();
        let profile = bi_error(&pair, c).unwrap();
        assert!((profile.zeta - 0.78).abs() <= 5e-3);
        assert!((profile.beta - 0.732).abs() <= 5e-4);
        // reference values from an independent high-precision evaluation
        assert!((profile.zeta - 0.7820676109242).abs() <= 1e-9);
    }

    #[test]
    fn closed_form_midpoints() {
        let pair = normal_pair(0.0, 1.0, 1.0);
        let result = youden_closed_form(&pair).unwrap();
        assert_eq!(result.threshold, 0.5);
        assert_eq!(result.method, ThresholdMethod::ClosedForm);
        assert!(!result.degenerate);

        // families without moments still have the midpoint solution
        let cauchy = HypothesisPair::new(
            DistributionSpec::cauchy(0.0, 1.0).unwrap(),
            DistributionSpec::cauchy(3.0, 1.0).unwrap(),
            Tail::Upper,
        )
        .unwrap();
        assert_eq!(youden_closed_form(&cauchy).unwrap().threshold, 1.5);
    }

    #[test]
    fn closed_form_flags_degenerate_pair() {
        let pair = normal_pair(0.0, 0.0, 1.0);
        let result = youden_closed_form(&pair).unwrap();
        assert_eq!(result.threshold, 0.0);
        assert!(result.degenerate);
        assert!((result.profile.zeta - 1.0).abs() <= 1e-14);
        assert!((result.profile.alpha - 0.5).abs() <= 1e-14);
    }

    #[test]
    fn closed_form_rejects_inapplicable_pairs() {
        let unequal = HypothesisPair::new(
            DistributionSpec::normal(0.0, 1.0).unwrap(),
            DistributionSpec::normal(0.0, 2.0).unwrap(),
            Tail::Upper,
        )
        .unwrap();
        assert!(matches!(
            youden_closed_form(&unequal),
            Err(Error::TheoremInapplicable(_))
        ));
        assert!(matches!(
            youden_closed_form(&f_pair(10, 10, 10.0)),
            Err(Error::TheoremInapplicable(_))
        ));
        // same scale value but different shapes
        let mixed = HypothesisPair::new(
            DistributionSpec::normal(0.0, 1.0).unwrap(),
            DistributionSpec::logistic(1.0, 1.0).unwrap(),
            Tail::Upper,
        )
        .unwrap();
        assert!(youden_closed_form(&mixed).is_err());
        let df_mismatch = HypothesisPair::new(
            DistributionSpec::student_t(0.0, 1.0, 3).unwrap(),
            DistributionSpec::student_t(1.0, 1.0, 30).unwrap(),
            Tail::Upper,
        )
        .unwrap();
        assert!(youden_closed_form(&df_mismatch).is_err());
    }

    #[test]
    fn theorem_report_flags() {
        let ok = check_theorem1(&normal_pair(0.0, 1.0, 1.0));
        assert!(ok.symmetric && ok.tail_decreasing && ok.equal_scale);

        let f = check_theorem1(&f_pair(10, 10, 10.0));
        assert!(!f.symmetric);

        let unequal = HypothesisPair::new(
            DistributionSpec::normal(0.0, 1.0).unwrap(),
            DistributionSpec::normal(1.0, 2.0).unwrap(),
            Tail::Upper,
        )
        .unwrap();
        assert!(!check_theorem1(&unequal).equal_scale);
    }

    #[test]
    fn numeric_agrees_with_closed_form_for_normals() {
        let pair = normal_pair(0.0, 1.0, 1.0);
        let numeric = youden_numeric(&pair, 1e-10).unwrap();
        // resolution at the flat minimum is ~sqrt(ulp/curvature) ~ 2.5e-8
        assert!((numeric.threshold - 0.5).abs() <= 1e-7);
        assert_eq!(numeric.method, ThresholdMethod::Numeric);
        assert!(!numeric.degenerate);
    }

    #[test]
    fn numeric_f_case_one() {
        let result = youden_numeric(&f_pair(10, 10, 10.0), DEFAULT_TOL).unwrap();
        assert!((result.profile.zeta - 0.570).abs() <= 5e-3);
        assert!((result.profile.beta - 0.263).abs() <= 5e-3);
        // reference minimum from an independent high-precision evaluation
        assert!((result.threshold - 1.3879392398669723).abs() <= 1e-6);
        assert!((result.profile.zeta - 0.5697807879803631).abs() <= 1e-9);
        assert!((result.profile.alpha - 0.30697026927956883).abs() <= 1e-7);
    }

    #[test]
    fn numeric_f_case_two() {
        let result = youden_numeric(&f_pair(2, 30, 10.0), DEFAULT_TOL).unwrap();
        assert!((result.profile.zeta - 0.236).abs() <= 5e-3);
        assert!((result.profile.alpha - 0.112).abs() <= 5e-3);
        assert!((result.profile.beta - 0.123).abs() <= 5e-3);
        assert!((result.threshold - 2.353410314186954).abs() <= 1e-6);
    }

    #[test]
    fn numeric_detects_flat_objective() {
        // identical null and alternative: zeta is 1 everywhere
        let pair = f_pair(6, 8, 0.0);
        let result = youden_numeric(&pair, DEFAULT_TOL).unwrap();
        assert!(result.degenerate);
        assert!((result.profile.zeta - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn numeric_is_a_grid_global_minimum() {
        for pair in [
            normal_pair(0.0, 2.0, 0.7),
            f_pair(10, 10, 10.0),
            f_pair(2, 30, 10.0),
        ] {
            let result = youden_numeric(&pair, DEFAULT_TOL).unwrap();
            let lo = pair.null_dist().quantile(1e-6).unwrap();
            let hi = pair.alt_dist().quantile(1.0 - 1e-6).unwrap();
            for i in 0..=2000 {
                let c = lo + (hi - lo) * i as f64 / 2000.0;
                assert!(
                    result.profile.zeta <= bi_error(&pair, c).unwrap().zeta + 1e-12,
                    "zeta({c}) beats the reported minimum"
                );
            }
        }
    }

    #[test]
    fn stationarity_at_the_closed_form_threshold() {
        // the two densities cross at the minimizing threshold
        for (mu0, mu_a, sd) in [(0.0, 1.0, 1.0), (-2.0, 5.0, 2.5), (0.3, 0.9, 0.2)] {
            let pair = normal_pair(mu0, mu_a, sd);
            let j = youden_closed_form(&pair).unwrap().threshold;
            let gap = (pair.null_dist().pdf(j).unwrap() - pair.alt_dist().pdf(j).unwrap()).abs();
            assert!(gap <= 1e-9, "density gap {gap} at J = {j}");
        }
    }

    #[test]
    fn closed_form_is_translation_and_scale_equivariant() {
        let base = youden_closed_form(&normal_pair(0.0, 1.0, 1.0))
            .unwrap()
            .threshold;
        let shifted = youden_closed_form(&normal_pair(7.0, 8.0, 1.0))
            .unwrap()
            .threshold;
        assert_eq!(shifted, base + 7.0);
        let scaled = youden_closed_form(&normal_pair(0.0, 3.0, 3.0))
            .unwrap()
            .threshold;
        assert_eq!(scaled, 3.0 * base);
    }

    #[test]
    fn lower_tail_reflects_upper_tail() {
        let upper = normal_pair(0.0, 1.0, 1.0);
        let lower = HypothesisPair::new(
            DistributionSpec::normal(0.0, 1.0).unwrap(),
            DistributionSpec::normal(-1.0, 1.0).unwrap(),
            Tail::Lower,
        )
        .unwrap();
        let up = youden_closed_form(&upper).unwrap();
        let down = youden_closed_form(&lower).unwrap();
        assert_eq!(down.threshold, -up.threshold);
        assert!((down.profile.alpha - up.profile.alpha).abs() <= 1e-14);
        assert!((down.profile.beta - up.profile.beta).abs() <= 1e-14);
    }

    #[test]
    fn weighted_threshold_examples() {
        assert_eq!(weighted_threshold(0.8, 2.0, 0.5).unwrap(), 0.4);
        assert!(
            (weighted_threshold(1.0, 1.0, 0.75).unwrap() - (0.5 + 3.0_f64.ln())).abs() <= 1e-15
        );
        assert!(
            (weighted_threshold(2.0, 1.0, 0.25).unwrap() - (1.0 + (1.0 / 3.0_f64).ln() / 2.0))
                .abs()
                <= 1e-15
        );
        assert!((weighted_threshold(1.0, 1.0, 0.75).unwrap() - 1.5986).abs() <= 1e-4);
        assert!((weighted_threshold(2.0, 1.0, 0.25).unwrap() - 0.4507).abs() <= 1e-4);
        assert!(weighted_threshold(0.0, 1.0, 0.5).is_err());
        assert!(weighted_threshold(1.0, 0.0, 0.5).is_err());
        assert!(weighted_threshold(1.0, 1.0, 1.0).is_err());
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_pair() -> impl Strategy<Value = (HypothesisPair, f64)> {
        (-3.0_f64..3.0, 0.0_f64..4.0, 0.2_f64..3.0, -10.0_f64..10.0).prop_map(
            |(mu0, delta, sd, c)| {
                let pair = HypothesisPair::new(
                    DistributionSpec::normal(mu0, sd).unwrap(),
                    DistributionSpec::normal(mu0 + delta, sd).unwrap(),
                    Tail::Upper,
                )
                .unwrap();
                (pair, c)
            },
        )
    }

    proptest! {
        #[test]
        fn profile_components_are_probabilities((pair, c) in arb_pair()) {
            let profile = bi_error(&pair, c).unwrap();
            prop_assert!((0.0..=1.0).contains(&profile.alpha));
            prop_assert!((0.0..=1.0).contains(&profile.beta));
            prop_assert_eq!(profile.zeta, profile.alpha + profile.beta);
        }

        #[test]
        fn closed_form_never_beaten_nearby((pair, _) in arb_pair()) {
            let result = youden_closed_form(&pair).unwrap();
            for offset in [-0.5, -0.1, -0.01, 0.01, 0.1, 0.5] {
                let other = bi_error(&pair, result.threshold + offset).unwrap();
                prop_assert!(result.profile.zeta <= other.zeta + 1e-12);
            }
        }
    }
}
