//! Monte Carlo harness: rejection rates of the combined-error rule and
//! the classical t-test rule over a grid of sample sizes, true means,
//! and hypothesized alternative means.
//!
//! Each grid cell replication draws its own RNG substream keyed by
//! `(seed, n index, mu index, delta index, replication index)`, so the
//! resulting tables are bit-identical for a fixed seed regardless of
//! how the work is scheduled across threads.

use rayon::prelude::*;

use crate::bi_error::weighted_threshold;
use crate::dist::DistributionSpec;
use crate::error::{Error, Result};
use crate::rng::RngState;

/// Which comparison the combined-error rule makes.
///
/// `AsImplemented` compares the t statistic against the prior-weighted
/// threshold (`delta/2` under an indifferent prior); `AsStated`
/// compares the raw sample mean against `delta/2`. The published
/// rejection tables follow the first; both are kept because the
/// discrepancy between them is part of the record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleVariant {
    AsImplemented,
    AsStated,
}

/// Simulation grid and replication settings.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    /// Replications per cell.
    pub replications: u32,
    /// Sample sizes (each at least 2 so the sample SD exists).
    pub ns: Vec<u32>,
    /// True means of the sampled normal(mu, 1) data.
    pub mus: Vec<f64>,
    /// Hypothesized alternative means (all positive).
    pub deltas: Vec<f64>,
    /// Prior weight on the alternative in the weighted threshold.
    pub p1: f64,
    /// Significance level of the classical rule.
    pub nhst_alpha: f64,
    pub seed: u64,
    pub rule_variant: RuleVariant,
}

impl SimConfig {
    /// The published grid: n in {10, 20, 30, 50}, mu in
    /// {0, 0.3, 0.5, 0.7, 1}, deltas from 0.3 to 3.5, 10,000
    /// replications, indifferent prior, alpha = 0.05.
    pub fn default_grid(seed: u64) -> Self {
        SimConfig {
            replications: 10_000,
            ns: vec![10, 20, 30, 50],
            mus: vec![0.0, 0.3, 0.5, 0.7, 1.0],
            deltas: vec![0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5],
            p1: 0.5,
            nhst_alpha: 0.05,
            seed,
            rule_variant: RuleVariant::AsImplemented,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.replications == 0 {
            return Err(Error::config("replications must be at least 1"));
        }
        if self.ns.is_empty() || self.mus.is_empty() || self.deltas.is_empty() {
            return Err(Error::config("ns, mus, and deltas must all be nonempty"));
        }
        if let Some(n) = self.ns.iter().find(|&&n| n < 2) {
            return Err(Error::config(format!(
                "sample sizes must be at least 2, got {n}"
            )));
        }
        if let Some(d) = self.deltas.iter().find(|d| d.is_nan() || **d <= 0.0) {
            return Err(Error::config(format!(
                "hypothesized deltas must be positive, got {d}"
            )));
        }
        if !(self.p1 > 0.0 && self.p1 < 1.0) {
            return Err(Error::config(format!(
                "p1 must lie in (0, 1), got {}",
                self.p1
            )));
        }
        if !(self.nhst_alpha > 0.0 && self.nhst_alpha < 1.0) {
            return Err(Error::config(format!(
                "nhst_alpha must lie in (0, 1), got {}",
                self.nhst_alpha
            )));
        }
        Ok(())
    }
}

/// Summary statistics of one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleStats {
    pub mean: f64,
    pub sd: f64,
    pub t_stat: f64,
}

/// Mean, sample standard deviation (n - 1 denominator), and the
/// one-sample t statistic `mean sqrt(n) / sd`.
pub fn sample_stats(xs: &[f64]) -> Result<SampleStats> {
    if xs.len() < 2 {
        return Err(Error::domain(format!(
            "sample_stats needs at least 2 values, got {}",
            xs.len()
        )));
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let ss = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>();
    let sd = (ss / (n - 1.0)).sqrt();
    if sd == 0.0 {
        return Err(Error::DegenerateSample);
    }
    Ok(SampleStats {
        mean,
        sd,
        t_stat: mean * n.sqrt() / sd,
    })
}

/// The combined-error rejection rule for one sample.
pub fn bi_error_rule(
    stats: &SampleStats,
    delta_hat: f64,
    p1: f64,
    variant: RuleVariant,
) -> Result<bool> {
    match variant {
        RuleVariant::AsImplemented => {
            let critical = weighted_threshold(delta_hat, stats.sd, p1)?;
            Ok(stats.t_stat > critical)
        }
        RuleVariant::AsStated => {
            if delta_hat.is_nan() || delta_hat <= 0.0 {
                return Err(Error::domain(format!(
                    "delta_hat must be positive, got {delta_hat}"
                )));
            }
            Ok(stats.mean > delta_hat / 2.0)
        }
    }
}

/// The classical rule: t statistic beyond the upper `1 - alpha`
/// quantile of t with `n - 1` degrees of freedom.
pub fn nhst_rule(stats: &SampleStats, n: u32, alpha: f64) -> Result<bool> {
    if n < 2 {
        return Err(Error::domain(format!("n must be at least 2, got {n}")));
    }
    let critical = DistributionSpec::student_t(0.0, 1.0, n - 1)?.quantile(1.0 - alpha)?;
    Ok(stats.t_stat > critical)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimMethod {
    BiError,
    Nhst,
}

/// Empirical rejection rates for one sample size.
///
/// The combined-error table is indexed `rates[delta][mu]`; the
/// classical table carries a single aggregated row (its rule ignores
/// the hypothesized delta, so the per-delta rows are averaged).
#[derive(Debug, Clone, PartialEq)]
pub struct RejectionTable {
    pub method: SimMethod,
    pub n: u32,
    /// Row labels; empty for the aggregated classical table.
    pub deltas: Vec<f64>,
    /// Column labels (true means).
    pub mus: Vec<f64>,
    pub rates: Vec<Vec<f64>>,
    /// Worst-case Monte Carlo half-width over the cells,
    /// `max 2 sqrt(p (1 - p) / M)`.
    pub mc_error: f64,
    /// Samples redrawn because their standard deviation was zero.
    pub redraws: u64,
}

fn mc_half_width(rate: f64, replications: u32) -> f64 {
    2.0 * (rate * (1.0 - rate) / f64::from(replications)).sqrt()
}

/// Run the full grid. For every `(n, mu, delta, replication)` cell a
/// fresh normal(mu, 1) sample is drawn and both rules are applied to
/// it. Returns one combined-error table and one aggregated classical
/// table per sample size, in that order.
#[allow(clippy::needless_range_loop)] // indices address the flat outcome buffer
pub fn run_simulation(config: &SimConfig) -> Result<Vec<RejectionTable>> {
    config.validate()?;
    let root = RngState::new(config.seed);

    // one critical value per sample size
    let t_criticals: Vec<f64> = config
        .ns
        .iter()
        .map(|&n| DistributionSpec::student_t(0.0, 1.0, n - 1)?.quantile(1.0 - config.nhst_alpha))
        .collect::<Result<_>>()?;

    struct CellOutcome {
        bi_rejections: u32,
        nhst_rejections: u32,
        redraws: u64,
    }

    let n_mus = config.mus.len();
    let n_deltas = config.deltas.len();
    let cells: Vec<(usize, usize, usize)> = (0..config.ns.len())
        .flat_map(|ni| (0..n_mus).flat_map(move |mi| (0..n_deltas).map(move |di| (ni, mi, di))))
        .collect();

    let outcomes: Vec<Result<CellOutcome>> = cells
        .par_iter()
        .map(|&(ni, mi, di)| {
            let n = config.ns[ni];
            let mu = config.mus[mi];
            let delta = config.deltas[di];
            let population = DistributionSpec::normal(mu, 1.0)?;
            let cell_stream = root
                .substream(ni as u64)
                .substream(mi as u64)
                .substream(di as u64);
            let mut bi_rejections = 0u32;
            let mut nhst_rejections = 0u32;
            let mut redraws = 0u64;
            for rep in 0..config.replications {
                let rep_stream = cell_stream.substream(u64::from(rep));
                // a zero-SD sample (probability zero under the normal
                // model) is redrawn from the next substream index
                let mut attempt = 0u64;
                let stats = loop {
                    let mut rng = rep_stream.substream(attempt);
                    let sample = population.sample(&mut rng, n as usize)?;
                    match sample_stats(&sample) {
                        Ok(stats) => break stats,
                        Err(Error::DegenerateSample) if attempt < 64 => {
                            redraws += 1;
                            attempt += 1;
                        }
                        Err(e) => return Err(e),
                    }
                };
                if bi_error_rule(&stats, delta, config.p1, config.rule_variant)? {
                    bi_rejections += 1;
                }
                if stats.t_stat > t_criticals[ni] {
                    nhst_rejections += 1;
                }
            }
            Ok(CellOutcome {
                bi_rejections,
                nhst_rejections,
                redraws,
            })
        })
        .collect();

    let mut tables = Vec::with_capacity(config.ns.len() * 2);
    let reps = f64::from(config.replications);
    for (ni, &n) in config.ns.iter().enumerate() {
        let mut bi_rates = vec![vec![0.0; n_mus]; n_deltas];
        let mut nhst_row = vec![0.0; n_mus];
        let mut redraws = 0u64;
        for mi in 0..n_mus {
            for di in 0..n_deltas {
                let index = ni * n_mus * n_deltas + mi * n_deltas + di;
                let outcome = match &outcomes[index] {
                    Ok(o) => o,
                    Err(e) => return Err(e.clone()),
                };
                bi_rates[di][mi] = f64::from(outcome.bi_rejections) / reps;
                nhst_row[mi] += f64::from(outcome.nhst_rejections) / reps;
                redraws += outcome.redraws;
            }
            nhst_row[mi] /= n_deltas as f64;
        }

        let bi_mc = bi_rates
            .iter()
            .flatten()
            .map(|&r| mc_half_width(r, config.replications))
            .fold(0.0, f64::max);
        let nhst_mc = nhst_row
            .iter()
            .map(|&r| mc_half_width(r, config.replications))
            .fold(0.0, f64::max);

        tables.push(RejectionTable {
            method: SimMethod::BiError,
            n,
            deltas: config.deltas.clone(),
            mus: config.mus.clone(),
            rates: bi_rates,
            mc_error: bi_mc,
            redraws,
        });
        tables.push(RejectionTable {
            method: SimMethod::Nhst,
            n,
            deltas: Vec::new(),
            mus: config.mus.clone(),
            rates: vec![nhst_row],
            mc_error: nhst_mc,
            redraws,
        });
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_stats_hand_arithmetic() {
        let stats = sample_stats(&[1.0, 1.0, 1.0, 3.0]).unwrap();
        assert_eq!(stats.mean, 1.5);
        assert_eq!(stats.sd, 1.0);
        assert_eq!(stats.t_stat, 3.0);
    }

    #[test]
    fn sample_stats_rejects_degenerate_input() {
        assert!(matches!(
            sample_stats(&[2.0, 2.0, 2.0]),
            Err(Error::DegenerateSample)
        ));
        assert!(sample_stats(&[1.0]).is_err());
    }

    #[test]
    fn sample_stats_negation_flips_mean_and_t() {
        let xs = [0.2, -1.3, 4.0, 2.2, -0.7];
        let negated: Vec<f64> = xs.iter().map(|x| -x).collect();
        let a = sample_stats(&xs).unwrap();
        let b = sample_stats(&negated).unwrap();
        assert_eq!(a.mean, -b.mean);
        assert_eq!(a.sd, b.sd);
        assert_eq!(a.t_stat, -b.t_stat);
    }

    #[test]
    fn rule_variants_compare_different_statistics() {
        let stats = SampleStats {
            mean: 0.1,
            sd: 1.0,
            t_stat: 0.2,
        };
        // indifferent prior: threshold is delta/2 = 0.15
        assert!(bi_error_rule(&stats, 0.3, 0.5, RuleVariant::AsImplemented).unwrap());
        assert!(!bi_error_rule(&stats, 0.3, 0.5, RuleVariant::AsStated).unwrap());
        assert!(bi_error_rule(&stats, 0.0, 0.5, RuleVariant::AsImplemented).is_err());
    }

    #[test]
    fn prior_weight_shifts_the_threshold() {
        let stats = SampleStats {
            mean: 0.3,
            sd: 1.0,
            t_stat: 1.0,
        };
        // log-odds term: p1 = 0.75 gives 0.5 + ln 3 ~ 1.60, p1 = 0.25
        // gives 0.5 - ln 3 ~ -0.60
        assert!(!bi_error_rule(&stats, 1.0, 0.75, RuleVariant::AsImplemented).unwrap());
        assert!(bi_error_rule(&stats, 1.0, 0.25, RuleVariant::AsImplemented).unwrap());
    }

    #[test]
    fn nhst_rule_uses_the_t_quantile() {
        let critical = DistributionSpec::student_t(0.0, 1.0, 9)
            .unwrap()
            .quantile(0.95)
            .unwrap();
        let below = SampleStats {
            mean: 0.0,
            sd: 1.0,
            t_stat: critical - 1e-9,
        };
        let above = SampleStats {
            mean: 0.0,
            sd: 1.0,
            t_stat: critical + 1e-9,
        };
        assert!(!nhst_rule(&below, 10, 0.05).unwrap());
        assert!(nhst_rule(&above, 10, 0.05).unwrap());
    }

    fn small_config(seed: u64) -> SimConfig {
        SimConfig {
            replications: 2000,
            ns: vec![10, 20],
            mus: vec![0.0, 0.5],
            deltas: vec![0.3, 1.0, 2.0],
            p1: 0.5,
            nhst_alpha: 0.05,
            seed,
            rule_variant: RuleVariant::AsImplemented,
        }
    }

    #[test]
    fn simulation_shapes_and_labels() {
        let tables = run_simulation(&small_config(5)).unwrap();
        assert_eq!(tables.len(), 4);
        assert_eq!(tables[0].method, SimMethod::BiError);
        assert_eq!(tables[0].n, 10);
        assert_eq!(tables[0].rates.len(), 3);
        assert_eq!(tables[0].rates[0].len(), 2);
        assert_eq!(tables[1].method, SimMethod::Nhst);
        assert_eq!(tables[1].rates.len(), 1);
        assert_eq!(tables[3].n, 20);
        for table in &tables {
            for row in &table.rates {
                for &rate in row {
                    assert!((0.0..=1.0).contains(&rate));
                }
            }
            assert!(table.mc_error > 0.0);
        }
    }

    #[test]
    fn simulation_is_deterministic_across_thread_counts() {
        let config = small_config(99);
        let baseline = run_simulation(&config).unwrap();
        let rerun = run_simulation(&config).unwrap();
        assert_eq!(baseline, rerun);

        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| run_simulation(&config))
            .unwrap();
        assert_eq!(baseline, single);

        let four = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| run_simulation(&config))
            .unwrap();
        assert_eq!(baseline, four);
    }

    #[test]
    fn different_seeds_differ() {
        let a = run_simulation(&small_config(1)).unwrap();
        let b = run_simulation(&small_config(2)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn single_replication_rates_are_binary() {
        let mut config = small_config(3);
        config.replications = 1;
        for table in run_simulation(&config).unwrap() {
            if table.method == SimMethod::BiError {
                for row in &table.rates {
                    for &rate in row {
                        assert!(rate == 0.0 || rate == 1.0);
                    }
                }
            }
        }
    }

    #[test]
    fn null_rates_match_the_t_tail_oracle() {
        // under mu = 0 the rule rejects iff T_{n-1} > delta/2, so the
        // rate estimates a central-t tail probability
        let config = SimConfig {
            replications: 10_000,
            ns: vec![10],
            mus: vec![0.0],
            deltas: vec![0.3, 1.0],
            p1: 0.5,
            nhst_alpha: 0.05,
            seed: 12,
            rule_variant: RuleVariant::AsImplemented,
        };
        let tables = run_simulation(&config).unwrap();
        let t9 = DistributionSpec::student_t(0.0, 1.0, 9).unwrap();
        for (di, &delta) in config.deltas.iter().enumerate() {
            let expected = 1.0 - t9.cdf(delta / 2.0).unwrap();
            let observed = tables[0].rates[di][0];
            let slack = 3.0 * mc_half_width(expected, config.replications);
            assert!(
                (observed - expected).abs() <= slack,
                "delta {delta}: {observed} vs {expected}"
            );
        }
        // classical rule calibrates to alpha under the null
        let nhst_rate = tables[1].rates[0][0];
        assert!((nhst_rate - 0.05).abs() <= 3.0 * mc_half_width(0.05, config.replications));
    }

    #[test]
    fn rates_are_monotone_in_mu_and_delta() {
        let config = SimConfig {
            replications: 4000,
            ns: vec![10],
            mus: vec![0.0, 0.3, 0.7],
            deltas: vec![0.3, 1.0, 2.0, 3.0],
            p1: 0.5,
            nhst_alpha: 0.05,
            seed: 44,
            rule_variant: RuleVariant::AsImplemented,
        };
        let table = &run_simulation(&config).unwrap()[0];
        let slack = 2.0 * table.mc_error;
        for row in &table.rates {
            for pair in row.windows(2) {
                assert!(pair[1] >= pair[0] - slack, "not rising in mu: {row:?}");
            }
        }
        for mi in 0..config.mus.len() {
            for di in 1..config.deltas.len() {
                assert!(
                    table.rates[di][mi] <= table.rates[di - 1][mi] + slack,
                    "not falling in delta at column {mi}"
                );
            }
        }
    }

    #[test]
    fn as_stated_variant_compares_the_mean() {
        // with mu far above delta/2 the mean rule almost always rejects
        let config = SimConfig {
            replications: 500,
            ns: vec![10],
            mus: vec![1.0],
            deltas: vec![0.3],
            p1: 0.5,
            nhst_alpha: 0.05,
            seed: 8,
            rule_variant: RuleVariant::AsStated,
        };
        let tables = run_simulation(&config).unwrap();
        assert!(tables[0].rates[0][0] > 0.95);
    }

    #[test]
    fn config_validation() {
        let mut config = small_config(1);
        config.ns = vec![1];
        assert!(run_simulation(&config).is_err());
        let mut config = small_config(1);
        config.deltas = vec![0.0];
        assert!(run_simulation(&config).is_err());
        let mut config = small_config(1);
        config.p1 = 1.0;
        assert!(run_simulation(&config).is_err());
        let mut config = small_config(1);
        config.replications = 0;
        assert!(run_simulation(&config).is_err());
    }
}
