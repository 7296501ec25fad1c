//! What the conventional alpha = 0.05 threshold costs relative to the
//! minimizing threshold: the excess combined error `xi`, the error odds
//! ratio `phi`, effect-size sweeps, and the F-distribution case
//! studies.

use crate::bi_error::{
    bi_error, check_theorem1, youden_closed_form, youden_numeric, HypothesisPair, Tail, DEFAULT_TOL,
};
use crate::dist::DistributionSpec;
use crate::error::{Error, Result};
use crate::special::erf;

/// Odds are reported as undefined once a combined error is this close
/// to 1 (and at zero effect size, where both errors reach it).
const ODDS_UNDEFINED_MARGIN: f64 = 1e-12;

/// Cross-check tolerance between the generic CDF route and the
/// closed-form normal expressions.
const CROSS_CHECK_TOL: f64 = 1e-9;

/// One comparison between the conventional threshold and the
/// minimizing threshold.
///
/// `x_value` is the sweep variable that produced the point (the
/// location difference, the variance, or Cohen's d, depending on the
/// sweep). The odds fields are `None` where a combined error sits at 1
/// and the odds diverge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonPoint {
    pub x_value: f64,
    pub zeta_alpha: f64,
    pub zeta_star: f64,
    pub xi: f64,
    pub omega1: Option<f64>,
    pub omega2: Option<f64>,
    pub phi: Option<f64>,
}

/// An inclusive, evenly spaced grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRange {
    pub start: f64,
    pub end: f64,
    pub points: usize,
}

impl GridRange {
    pub fn new(start: f64, end: f64, points: usize) -> Result<Self> {
        if !(start.is_finite() && end.is_finite()) || end < start {
            return Err(Error::config(format!(
                "range must be finite with end >= start, got [{start}, {end}]"
            )));
        }
        if points == 0 || (points == 1 && end != start) {
            return Err(Error::config(format!(
                "range [{start}, {end}] needs at least two points, got {points}"
            )));
        }
        Ok(GridRange { start, end, points })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.start];
        }
        let step = (self.end - self.start) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| self.start + step * i as f64)
            .collect()
    }
}

/// Shared sweep parameters. Each sweep reads the fields it needs:
/// the delta sweep holds `sigma2_fixed` constant, the variance sweep
/// holds `delta_fixed` constant, and the odds sweep ranges over the
/// alternative location at `sigma2_fixed`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub alpha: f64,
    pub mu0: f64,
    pub sigma2_fixed: f64,
    pub delta_fixed: f64,
    pub range: GridRange,
}

/// Grid resolution used by the default sweep configurations.
pub const DEFAULT_SWEEP_POINTS: usize = 120;

impl SweepConfig {
    pub fn new(
        alpha: f64,
        mu0: f64,
        sigma2_fixed: f64,
        delta_fixed: f64,
        range: GridRange,
    ) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::config(format!(
                "alpha must lie in (0, 1), got {alpha}"
            )));
        }
        if !mu0.is_finite() {
            return Err(Error::config(format!("mu0 must be finite, got {mu0}")));
        }
        if !sigma2_fixed.is_finite() || sigma2_fixed <= 0.0 {
            return Err(Error::config(format!(
                "sigma2 must be positive, got {sigma2_fixed}"
            )));
        }
        if !delta_fixed.is_finite() {
            return Err(Error::config(format!(
                "delta must be finite, got {delta_fixed}"
            )));
        }
        Ok(SweepConfig {
            alpha,
            mu0,
            sigma2_fixed,
            delta_fixed,
            range,
        })
    }

    /// Location-difference sweep at fixed variance 2.
    pub fn delta_sweep_default() -> Self {
        SweepConfig {
            alpha: 0.05,
            mu0: 0.0,
            sigma2_fixed: 2.0,
            delta_fixed: 3.0,
            range: GridRange {
                start: 0.1,
                end: 6.0,
                points: DEFAULT_SWEEP_POINTS,
            },
        }
    }

    /// Variance sweep at fixed location difference 3.
    pub fn sigma2_sweep_default() -> Self {
        SweepConfig {
            alpha: 0.05,
            mu0: 0.0,
            sigma2_fixed: 2.0,
            delta_fixed: 3.0,
            range: GridRange {
                start: 0.5,
                end: 10.0,
                points: DEFAULT_SWEEP_POINTS,
            },
        }
    }

    /// Odds-ratio sweep over the alternative location at variance 5.
    pub fn phi_sweep_default() -> Self {
        SweepConfig {
            alpha: 0.05,
            mu0: 0.0,
            sigma2_fixed: 5.0,
            delta_fixed: 3.0,
            range: GridRange {
                start: 0.0,
                end: 2.0,
                points: DEFAULT_SWEEP_POINTS,
            },
        }
    }
}

fn odds(zeta: f64) -> Option<f64> {
    if zeta >= 1.0 - ODDS_UNDEFINED_MARGIN {
        None
    } else {
        Some(zeta / (1.0 - zeta))
    }
}

/// Closed-form combined errors for an equal-scale normal pair with
/// absolute standardized effect `d`: the conventional threshold gives
/// `alpha + Phi(z_{1-alpha} - d)`, the minimizing threshold `2 Phi(-d/2)`.
fn normal_closed_form_zetas(d: f64, alpha: f64) -> Result<(f64, f64)> {
    let z = DistributionSpec::normal(0.0, 1.0)?.quantile(1.0 - alpha)?;
    let phi = |x: f64| 0.5 * (1.0 + erf(x / std::f64::consts::SQRT_2));
    Ok((alpha + phi(z - d), 2.0 * phi(-d / 2.0)))
}

/// Compare the conventional threshold against the minimizing one for a
/// pair, filling the error difference and the error odds ratio.
///
/// `x_value` carries the location difference (or, for an F pair, the
/// noncentrality difference). For normal pairs the generic CDF route
/// is cross-checked against the closed-form expressions and a mismatch
/// is reported as a numeric failure.
pub fn xi(pair: &HypothesisPair, alpha: f64) -> Result<ComparisonPoint> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let conventional = match pair.tail() {
        Tail::Upper => pair.null_dist().quantile(1.0 - alpha)?,
        Tail::Lower => pair.null_dist().quantile(alpha)?,
    };
    let zeta_alpha = bi_error(pair, conventional)?.zeta;
    let star = if check_theorem1(pair).holds() {
        youden_closed_form(pair)?
    } else {
        youden_numeric(pair, DEFAULT_TOL)?
    };
    let zeta_star = star.profile.zeta;

    let x_value = match (
        pair.null_dist().location_scale(),
        pair.alt_dist().location_scale(),
    ) {
        (Some((mu0, _)), Some((mu_a, _))) => mu_a - mu0,
        _ => match (pair.null_dist(), pair.alt_dist()) {
            (
                DistributionSpec::FisherF {
                    noncentrality: l0, ..
                },
                DistributionSpec::FisherF {
                    noncentrality: la, ..
                },
            ) => la - l0,
            _ => f64::NAN,
        },
    };

    // guard the special-function stack: normals must agree with the
    // closed-form expressions
    if let (
        DistributionSpec::Normal { mean: mu0, sd: s0 },
        DistributionSpec::Normal { mean: mu_a, sd: sa },
    ) = (pair.null_dist(), pair.alt_dist())
    {
        if s0 == sa {
            let d = (mu_a - mu0).abs() / s0;
            let (expected_alpha, expected_star) = normal_closed_form_zetas(d, alpha)?;
            if (zeta_alpha - expected_alpha).abs() > CROSS_CHECK_TOL
                || (zeta_star - expected_star).abs() > CROSS_CHECK_TOL
            {
                return Err(Error::numeric(format!(
                    "normal cross-check failed: zeta_alpha {zeta_alpha} vs {expected_alpha}, zeta_star {zeta_star} vs {expected_star}"
                )));
            }
        }
    }

    let omega1 = odds(zeta_alpha);
    let omega2 = odds(zeta_star);
    let phi = match (omega1, omega2) {
        (Some(o1), Some(o2)) if o2 > 0.0 => Some(o1 / o2),
        _ => None,
    };
    Ok(ComparisonPoint {
        x_value,
        zeta_alpha,
        zeta_star,
        xi: zeta_alpha - zeta_star,
        omega1,
        omega2,
        phi,
    })
}

/// Standardized effect size `(muA - mu0) / sigma`.
pub fn cohens_d(mu0: f64, mu_a: f64, sigma: f64) -> Result<f64> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::domain(format!(
            "cohens_d requires sigma > 0, got {sigma}"
        )));
    }
    Ok((mu_a - mu0) / sigma)
}

fn normal_pair(mu0: f64, mu_a: f64, sigma: f64) -> Result<HypothesisPair> {
    HypothesisPair::new(
        DistributionSpec::normal(mu0, sigma)?,
        DistributionSpec::normal(mu_a, sigma)?,
        Tail::Upper,
    )
}

/// Sweep the location difference at fixed variance (`x_value` = delta).
///
/// The range must start above zero: at delta = 0 the pair is
/// degenerate and `xi` is pinned to `zeta(c_alpha) - 1 <= 0`.
pub fn sweep_delta(config: &SweepConfig) -> Result<Vec<ComparisonPoint>> {
    if config.range.start <= 0.0 {
        return Err(Error::config(format!(
            "delta range must start above 0, got {}",
            config.range.start
        )));
    }
    let sigma = config.sigma2_fixed.sqrt();
    config
        .range
        .values()
        .into_iter()
        .map(|delta| {
            let pair = normal_pair(config.mu0, config.mu0 + delta, sigma)?;
            let mut point = xi(&pair, config.alpha)?;
            point.x_value = delta;
            Ok(point)
        })
        .collect()
}

/// Sweep the variance at fixed location difference (`x_value` = sigma^2).
pub fn sweep_sigma2(config: &SweepConfig) -> Result<Vec<ComparisonPoint>> {
    if config.range.start <= 0.0 {
        return Err(Error::config(format!(
            "sigma2 range must start above 0, got {}",
            config.range.start
        )));
    }
    if config.delta_fixed <= 0.0 {
        return Err(Error::config(format!(
            "fixed delta must be positive, got {}",
            config.delta_fixed
        )));
    }
    config
        .range
        .values()
        .into_iter()
        .map(|sigma2| {
            let pair = normal_pair(config.mu0, config.mu0 + config.delta_fixed, sigma2.sqrt())?;
            let mut point = xi(&pair, config.alpha)?;
            point.x_value = sigma2;
            Ok(point)
        })
        .collect()
}

/// Sweep the alternative location at fixed variance, reporting the odds
/// ratio against Cohen's d (`x_value` = d). The grid may include
/// `muA = mu0`, where the odds diverge and `phi` is `None`.
pub fn sweep_phi(config: &SweepConfig) -> Result<Vec<ComparisonPoint>> {
    if config.range.start < 0.0 {
        return Err(Error::config(format!(
            "muA range must start at or above mu0, got offset {}",
            config.range.start
        )));
    }
    let sigma = config.sigma2_fixed.sqrt();
    config
        .range
        .values()
        .into_iter()
        .map(|mu_a_offset| {
            let mu_a = config.mu0 + mu_a_offset;
            let pair = normal_pair(config.mu0, mu_a, sigma)?;
            let mut point = xi(&pair, config.alpha)?;
            point.x_value = cohens_d(config.mu0, mu_a, sigma)?;
            Ok(point)
        })
        .collect()
}

/// Both-threshold error breakdown for an F-distribution test with a
/// noncentral alternative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FCaseStudy {
    pub threshold_alpha: f64,
    pub zeta_alpha: f64,
    pub beta_alpha: f64,
    pub threshold_star: f64,
    pub zeta_star: f64,
    pub alpha_star: f64,
    pub beta_star: f64,
    /// True when the noncentrality is zero: the null and alternative
    /// coincide and every threshold gives `zeta = 1`.
    pub degenerate: bool,
}

/// Evaluate the F case: null `F(d1, d2)` against noncentral
/// `F(d1, d2, lambda)`, at the conventional `1 - alpha` quantile and at
/// the numerically minimizing threshold.
pub fn f_case_study(d1: u32, d2: u32, lambda: f64, alpha: f64) -> Result<FCaseStudy> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let pair = HypothesisPair::new(
        DistributionSpec::fisher_f(d1, d2, 0.0)?,
        DistributionSpec::fisher_f(d1, d2, lambda)?,
        Tail::Upper,
    )?;
    let threshold_alpha = pair.null_dist().quantile(1.0 - alpha)?;
    let at_alpha = bi_error(&pair, threshold_alpha)?;
    let star = youden_numeric(&pair, DEFAULT_TOL)?;
    Ok(FCaseStudy {
        threshold_alpha,
        zeta_alpha: at_alpha.zeta,
        beta_alpha: at_alpha.beta,
        threshold_star: star.threshold,
        zeta_star: star.profile.zeta,
        alpha_star: star.profile.alpha,
        beta_star: star.profile.beta,
        degenerate: lambda == 0.0 || star.degenerate,
    })
}

/// The error-function form of `xi` next to the direct CDF computation.
///
/// For an upper-tail equal-scale normal pair with absolute effect
/// `d = |muA - mu0| / sigma`,
///
/// ```text
/// xi = (alpha - 1/2) + erf((z_{1-alpha} - d) / sqrt(2)) / 2 + erf(d / (2 sqrt(2)))
/// ```
///
/// A lower-tail pair (`muA < mu0`) mirrors onto the same expression.
/// The direct CDF value is the ground truth; the terms are reported for
/// inspection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiErfDecomposition {
    pub cohens_d: f64,
    /// xi from the generic CDF route.
    pub direct: f64,
    /// alpha - 1/2.
    pub constant_term: f64,
    /// erf((z_{1-alpha} - |d|) / sqrt(2)) / 2, the conventional-threshold part.
    pub critical_value_term: f64,
    /// erf(|d| / (2 sqrt(2))), the effect-size part.
    pub effect_term: f64,
    /// Sum of the three terms; equals `direct` up to roundoff.
    pub erf_total: f64,
}

pub fn xi_erf_decomposition(
    mu0: f64,
    mu_a: f64,
    sigma: f64,
    alpha: f64,
) -> Result<XiErfDecomposition> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::domain(format!(
            "sigma must be positive, got {sigma}"
        )));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let d = cohens_d(mu0, mu_a, sigma)?;
    let magnitude = d.abs();
    let tail = if mu_a >= mu0 {
        Tail::Upper
    } else {
        Tail::Lower
    };
    let pair = HypothesisPair::new(
        DistributionSpec::normal(mu0, sigma)?,
        DistributionSpec::normal(mu_a, sigma)?,
        tail,
    )?;
    let direct = xi(&pair, alpha)?.xi;

    let z = DistributionSpec::normal(0.0, 1.0)?.quantile(1.0 - alpha)?;
    let constant_term = alpha - 0.5;
    let critical_value_term = 0.5 * erf((z - magnitude) / std::f64::consts::SQRT_2);
    let effect_term = erf(magnitude / (2.0 * std::f64::consts::SQRT_2));
    Ok(XiErfDecomposition {
        cohens_d: d,
        direct,
        constant_term,
        critical_value_term,
        effect_term,
        erf_total: constant_term + critical_value_term + effect_term,
    })
}
