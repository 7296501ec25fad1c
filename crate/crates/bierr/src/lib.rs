//! Additive Type I + Type II error analysis for one-sided hypothesis
//! tests.
//!
//! The library centers on the combined error curve
//! `zeta(c) = alpha(c) + beta(c)` of a decision threshold `c` between a
//! null and an alternative sampling distribution. It provides:
//!
//! * [`dist`] — the distribution families needed to evaluate the curve
//!   (normal, Student t, central/noncentral Fisher F, Cauchy, Laplace,
//!   logistic), with density, CDF, quantile, and inverse-CDF sampling;
//! * [`bi_error`] — the curve itself, the threshold that minimizes it
//!   (closed form for symmetric equal-scale location pairs, numeric
//!   search otherwise), and the prior-weighted variant;
//! * [`decision`] — a five-step decision procedure with an explicit
//!   inconclusive outcome, next to the classical fixed-alpha rule;
//! * [`comparison`] — how much error the conventional alpha = 0.05
//!   cutoff adds over the minimizing threshold (difference, odds
//!   ratio, effect-size sweeps, F case studies);
//! * [`simulation`] — a reproducible Monte Carlo harness that measures
//!   rejection rates of both rules on one-sample t-test data.

// reference constants keep their published digit counts
#![allow(clippy::excessive_precision)]

pub mod bi_error;
pub mod comparison;
pub mod decision;
pub mod dist;
pub mod error;
pub mod rng;
pub mod simulation;
pub mod special;

pub use bi_error::{
    bi_error, check_theorem1, weighted_threshold, youden_closed_form, youden_numeric, ErrorProfile,
    HypothesisPair, Tail, Theorem1Report, ThresholdMethod, ThresholdResult,
};
pub use comparison::{
    cohens_d, f_case_study, sweep_delta, sweep_phi, sweep_sigma2, xi, xi_erf_decomposition,
    ComparisonPoint, FCaseStudy, GridRange, SweepConfig, XiErfDecomposition,
};
pub use decision::{
    decide_at_threshold, run_bi_error_method, run_nhst, DecisionConfig, DecisionReport,
    InconclusiveReason, Outcome,
};
pub use dist::DistributionSpec;
pub use error::{Error, Result};
pub use rng::RngState;
pub use simulation::{
    bi_error_rule, nhst_rule, run_simulation, sample_stats, RejectionTable, RuleVariant,
    SampleStats, SimConfig, SimMethod,
};
