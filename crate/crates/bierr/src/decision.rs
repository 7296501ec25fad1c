//! The five-step decision procedure with an inconclusive outcome, and
//! the classical fixed-alpha rule it replaces.
//!
//! The combined-error procedure finds the minimizing threshold, checks
//! the resulting error profile against analyst-supplied bounds, and
//! only then compares the observed statistic. If any error bound is
//! exceeded the data never enter the decision: the result is
//! inconclusive. There are deliberately no default bounds anywhere.

use crate::bi_error::{
    bi_error, check_theorem1, youden_closed_form, youden_numeric, HypothesisPair, Tail,
    ThresholdMethod, ThresholdResult, DEFAULT_TOL,
};
use crate::error::{Error, Result};

/// Analyst-chosen upper bounds on the error profile at the threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecisionConfig {
    pub alpha_max: f64,
    pub beta_max: f64,
    pub zeta_max: f64,
}

impl DecisionConfig {
    /// Bounds on alpha and beta; the combined bound defaults to their sum.
    pub fn new(alpha_max: f64, beta_max: f64) -> Result<Self> {
        Self::with_zeta_max(alpha_max, beta_max, alpha_max + beta_max)
    }

    pub fn with_zeta_max(alpha_max: f64, beta_max: f64, zeta_max: f64) -> Result<Self> {
        if !(alpha_max > 0.0 && alpha_max <= 1.0) {
            return Err(Error::config(format!(
                "alpha_max must lie in (0, 1], got {alpha_max}"
            )));
        }
        if !(beta_max > 0.0 && beta_max <= 1.0) {
            return Err(Error::config(format!(
                "beta_max must lie in (0, 1], got {beta_max}"
            )));
        }
        if !(zeta_max > 0.0 && zeta_max <= 2.0) {
            return Err(Error::config(format!(
                "zeta_max must lie in (0, 2], got {zeta_max}"
            )));
        }
        Ok(DecisionConfig {
            alpha_max,
            beta_max,
            zeta_max,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Reject,
    FailToReject,
    Inconclusive,
}

/// Which bound failed, in the fixed checking order alpha, beta, zeta.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InconclusiveReason {
    None,
    AlphaTooHigh,
    BetaTooHigh,
    ZetaTooHigh,
}

/// Everything a decision run produces: the outcome, why it was
/// inconclusive (if it was), the threshold used, and the observation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecisionReport {
    pub outcome: Outcome,
    pub reason: InconclusiveReason,
    pub threshold: ThresholdResult,
    pub observed: f64,
}

fn beyond_threshold(tail: Tail, observed: f64, threshold: f64) -> bool {
    match tail {
        Tail::Upper => observed > threshold,
        Tail::Lower => observed < threshold,
    }
}

/// Run the combined-error procedure: minimize `zeta` (closed form when
/// the preconditions hold, numeric search otherwise), screen the error
/// profile against the configured bounds, then compare the observation
/// strictly against the threshold.
pub fn run_bi_error_method(
    pair: &HypothesisPair,
    config: &DecisionConfig,
    observed: f64,
) -> Result<DecisionReport> {
    let threshold = if check_theorem1(pair).holds() {
        youden_closed_form(pair)?
    } else {
        youden_numeric(pair, DEFAULT_TOL)?
    };
    decide_at_threshold(pair, config, observed, threshold)
}

/// Screen a precomputed threshold against the bounds (in the order
/// alpha, beta, zeta) and, if conclusive, compare the observation.
pub fn decide_at_threshold(
    pair: &HypothesisPair,
    config: &DecisionConfig,
    observed: f64,
    threshold: ThresholdResult,
) -> Result<DecisionReport> {
    if !observed.is_finite() {
        return Err(Error::domain(format!(
            "observed statistic must be finite, got {observed}"
        )));
    }
    let profile = threshold.profile;
    let reason = if profile.alpha > config.alpha_max {
        InconclusiveReason::AlphaTooHigh
    } else if profile.beta > config.beta_max {
        InconclusiveReason::BetaTooHigh
    } else if profile.zeta > config.zeta_max {
        InconclusiveReason::ZetaTooHigh
    } else {
        InconclusiveReason::None
    };

    let outcome = if reason != InconclusiveReason::None {
        Outcome::Inconclusive
    } else if beyond_threshold(pair.tail(), observed, threshold.threshold) {
        Outcome::Reject
    } else {
        Outcome::FailToReject
    };

    Ok(DecisionReport {
        outcome,
        reason,
        threshold,
        observed,
    })
}

/// The classical rule: reject when the observation is strictly beyond
/// the `1 - alpha` null quantile (mirrored for a lower tail). Never
/// inconclusive; the report still carries the full error profile at
/// that threshold so the implied Type II error is visible.
pub fn run_nhst(pair: &HypothesisPair, alpha: f64, observed: f64) -> Result<DecisionReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    if !observed.is_finite() {
        return Err(Error::domain(format!(
            "observed statistic must be finite, got {observed}"
        )));
    }
    let critical = match pair.tail() {
        Tail::Upper => pair.null_dist().quantile(1.0 - alpha)?,
        Tail::Lower => pair.null_dist().quantile(alpha)?,
    };
    let threshold = ThresholdResult {
        threshold: critical,
        profile: bi_error(pair, critical)?,
        method: ThresholdMethod::Numeric,
        iterations: 0,
        degenerate: false,
    };
    let outcome = if beyond_threshold(pair.tail(), observed, critical) {
        Outcome::Reject
    } else {
        Outcome::FailToReject
    };
    Ok(DecisionReport {
        outcome,
        reason: InconclusiveReason::None,
        threshold,
        observed,
    })
}
