//! Command-line front end: optimal thresholds, the five-step decision
//! procedure, comparison sweeps, and Monte Carlo rejection tables.

mod config_file;
mod output;
mod spec_parse;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use bierr::bi_error::DEFAULT_TOL;
use bierr::{
    check_theorem1, decide_at_threshold, f_case_study, sweep_delta, sweep_phi, sweep_sigma2,
    youden_closed_form, youden_numeric, DecisionConfig, DistributionSpec, GridRange,
    HypothesisPair, InconclusiveReason, Outcome, RuleVariant, SimConfig, SweepConfig, Tail,
    ThresholdMethod, ThresholdResult,
};
use config_file::FileConfig;
use output::{
    render_case_f, render_comparison_points, render_rejection_tables, OutputFormat, RenderOptions,
};
use spec_parse::parse_distribution_spec;

/// Analyze one-sided hypothesis tests by their combined Type I + Type
/// II error.
///
/// Distribution specs use the grammar `kind:key=value,...`, for example
/// `normal:mu=0,sigma=1`, `t:df=9`, or `f:d1=10,d2=10,ncp=10`.
#[derive(Parser)]
#[command(name = "bierr", version, max_term_width = 100)]
struct Cli {
    /// Flat key=value config file; flags override file values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the threshold minimizing alpha + beta for a pair of
    /// sampling distributions.
    Threshold(ThresholdArgs),
    /// Run the five-step decision procedure on an observed statistic.
    ///
    /// Error bounds have no defaults on purpose: choosing them is the
    /// analyst's contextual judgment, so --alpha-max and --beta-max are
    /// mandatory.
    Decide(DecideArgs),
    /// Quantify the penalty of the conventional alpha = 0.05 threshold.
    #[command(subcommand)]
    Compare(CompareCommand),
    /// Monte Carlo rejection tables for the combined-error rule and the
    /// classical t-test rule.
    ///
    /// CSV columns: method,n,mu_hat_a,mu,rate,mc_error. Markdown mirrors
    /// the tabular layout: hypothesized means down the rows, true means
    /// across the columns, one table per method and sample size.
    Simulate(SimulateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TailArg {
    Upper,
    Lower,
}

impl From<TailArg> for Tail {
    fn from(tail: TailArg) -> Tail {
        match tail {
            TailArg::Upper => Tail::Upper,
            TailArg::Lower => Tail::Lower,
        }
    }
}

fn parse_spec_arg(text: &str) -> Result<DistributionSpec, String> {
    parse_distribution_spec(text)
}

#[derive(Args)]
struct PairArgs {
    /// Null sampling distribution, e.g. normal:mu=0,sigma=1
    #[arg(long, value_parser = parse_spec_arg)]
    null: DistributionSpec,
    /// Alternative sampling distribution, e.g. normal:mu=1,sigma=1
    #[arg(long, value_parser = parse_spec_arg)]
    alt: DistributionSpec,
    /// Which side of the threshold rejects.
    #[arg(long, value_enum, default_value = "upper")]
    tail: TailArg,
    /// Use the numeric minimizer even where the closed form applies
    /// (required for asymmetric or unequal-scale pairs).
    #[arg(long)]
    numeric: bool,
    /// Threshold tolerance for the numeric minimizer.
    #[arg(long)]
    tol: Option<f64>,
}

impl PairArgs {
    fn pair(&self) -> Result<HypothesisPair> {
        Ok(HypothesisPair::new(self.null, self.alt, self.tail.into())?)
    }

    fn solve(&self) -> Result<ThresholdResult> {
        let pair = self.pair()?;
        if self.numeric {
            Ok(youden_numeric(&pair, self.tol.unwrap_or(DEFAULT_TOL))?)
        } else {
            Ok(youden_closed_form(&pair)?)
        }
    }

    /// Closed form when it applies, numeric otherwise (or when forced).
    fn solve_with_fallback(&self) -> Result<ThresholdResult> {
        let pair = self.pair()?;
        if !self.numeric && check_theorem1(&pair).holds() {
            Ok(youden_closed_form(&pair)?)
        } else {
            Ok(youden_numeric(&pair, self.tol.unwrap_or(DEFAULT_TOL))?)
        }
    }
}

#[derive(Args)]
struct ThresholdArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Decimal places in the report.
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Args)]
struct DecideArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Observed test statistic.
    #[arg(long)]
    observed: f64,
    /// Largest acceptable Type I error at the threshold (mandatory).
    #[arg(long = "alpha-max")]
    alpha_max: f64,
    /// Largest acceptable Type II error at the threshold (mandatory).
    #[arg(long = "beta-max")]
    beta_max: f64,
    /// Largest acceptable combined error (defaults to the bound sum).
    #[arg(long = "zeta-max")]
    zeta_max: Option<f64>,
    /// Decimal places in the report.
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// csv or markdown.
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Decimal places for table entries.
    #[arg(long)]
    precision: Option<usize>,
}

/// Comparison sweeps emit one row per grid point with the fixed column
/// order x,zeta_alpha,zeta_star,xi,omega1,omega2,phi (x is the sweep
/// variable). Odds columns read NA where the odds diverge.
#[derive(Subcommand)]
enum CompareCommand {
    /// Sweep the location difference delta at fixed variance
    /// (default sigma2 = 2, delta in [0.1, 6], 120 points).
    SweepDelta {
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        mu0: Option<f64>,
        /// Fixed variance sigma^2.
        #[arg(long)]
        sigma2: Option<f64>,
        #[arg(long = "delta-min")]
        delta_min: Option<f64>,
        #[arg(long = "delta-max")]
        delta_max: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sweep the variance sigma^2 at fixed location difference
    /// (default delta = 3, sigma2 in [0.5, 10], 120 points).
    SweepSigma2 {
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        mu0: Option<f64>,
        /// Fixed location difference muA - mu0.
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long = "sigma2-min")]
        sigma2_min: Option<f64>,
        #[arg(long = "sigma2-max")]
        sigma2_max: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sweep the alternative mean, reporting the error odds ratio
    /// against Cohen's d (default sigma2 = 5, muA in [0, 2], 120 points).
    SweepPhi {
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        mu0: Option<f64>,
        #[arg(long)]
        sigma2: Option<f64>,
        #[arg(long = "muA-min")]
        mu_a_min: Option<f64>,
        #[arg(long = "muA-max")]
        mu_a_max: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Error profiles of an F test at both thresholds.
    ///
    /// Columns: d1,d2,ncp,alpha,threshold_alpha,zeta_alpha,beta_alpha,
    /// threshold_star,zeta_star,alpha_star,beta_star,degenerate.
    CaseF {
        #[arg(long)]
        d1: u32,
        #[arg(long)]
        d2: u32,
        /// Noncentrality of the alternative distribution.
        #[arg(long)]
        ncp: f64,
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    AsImplemented,
    AsStated,
}

impl From<RuleArg> for RuleVariant {
    fn from(rule: RuleArg) -> RuleVariant {
        match rule {
            RuleArg::AsImplemented => RuleVariant::AsImplemented,
            RuleArg::AsStated => RuleVariant::AsStated,
        }
    }
}

#[derive(Args)]
struct SimulateArgs {
    /// Replications per grid cell.
    #[arg(long = "M")]
    replications: Option<u32>,
    /// Comma-separated sample sizes.
    #[arg(long, value_name = "LIST")]
    ns: Option<String>,
    /// Comma-separated true means.
    #[arg(long, value_name = "LIST")]
    mus: Option<String>,
    /// Comma-separated hypothesized alternative means.
    #[arg(long, value_name = "LIST")]
    deltas: Option<String>,
    /// RNG seed (falls back to config, then BIERR_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Prior weight on the alternative in the weighted threshold.
    #[arg(long)]
    p1: Option<f64>,
    /// Combined-error rule variant: the t-statistic comparison that
    /// produced the published tables, or the literal mean comparison.
    #[arg(long, value_enum)]
    rule: Option<RuleArg>,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let file = FileConfig::load(cli.config.as_deref())?;
    match cli.command {
        Command::Threshold(args) => run_threshold(args),
        Command::Decide(args) => run_decide(args),
        Command::Compare(command) => run_compare(command, &file),
        Command::Simulate(args) => run_simulate(args, &file),
    }
}

fn method_name(result: &ThresholdResult) -> &'static str {
    match result.method {
        ThresholdMethod::ClosedForm => "closed-form",
        ThresholdMethod::Numeric => "numeric",
    }
}

fn run_threshold(args: ThresholdArgs) -> Result<()> {
    let result = args.pair.solve()?;
    let p = args.precision;
    let mut text = format!(
        "threshold: {:.p$}\nalpha: {:.p$}\nbeta: {:.p$}\nzeta: {:.p$}\nmethod: {}\n",
        result.threshold,
        result.profile.alpha,
        result.profile.beta,
        result.profile.zeta,
        method_name(&result),
    );
    if result.method == ThresholdMethod::Numeric {
        text.push_str(&format!("iterations: {}\n", result.iterations));
    }
    if result.degenerate {
        text.push_str("degenerate: true\n");
    }
    print!("{text}");
    Ok(())
}

fn run_decide(args: DecideArgs) -> Result<()> {
    let config = match args.zeta_max {
        Some(zeta_max) => DecisionConfig::with_zeta_max(args.alpha_max, args.beta_max, zeta_max)?,
        None => DecisionConfig::new(args.alpha_max, args.beta_max)?,
    };
    let pair = args.pair.pair()?;
    let threshold = args.pair.solve_with_fallback()?;
    let report = decide_at_threshold(&pair, &config, args.observed, threshold)?;

    let outcome = match (report.outcome, report.reason) {
        (Outcome::Reject, _) => "Reject".to_string(),
        (Outcome::FailToReject, _) => "FailToReject".to_string(),
        (Outcome::Inconclusive, reason) => format!(
            "Inconclusive({})",
            match reason {
                InconclusiveReason::AlphaTooHigh => "AlphaTooHigh",
                InconclusiveReason::BetaTooHigh => "BetaTooHigh",
                InconclusiveReason::ZetaTooHigh => "ZetaTooHigh",
                InconclusiveReason::None => "None",
            }
        ),
    };
    let p = args.precision;
    print!(
        "{outcome}\nobserved: {:.p$}\nthreshold: {:.p$}\nalpha: {:.p$}\nbeta: {:.p$}\nzeta: {:.p$}\nmethod: {}\n",
        report.observed,
        report.threshold.threshold,
        report.threshold.profile.alpha,
        report.threshold.profile.beta,
        report.threshold.profile.zeta,
        method_name(&report.threshold),
    );
    Ok(())
}

fn write_out(destination: Option<&PathBuf>, text: &str) -> Result<()> {
    match destination {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render_options(
    out: &OutputArgs,
    file: &FileConfig,
    default_format: OutputFormat,
    default_precision: usize,
) -> Result<RenderOptions> {
    let format = match out.format {
        Some(format) => format,
        None => match file.resolve_opt::<String>(None, "format")? {
            Some(name) => OutputFormat::from_str(&name, true)
                .map_err(|e| anyhow!("config key 'format': {e}"))?,
            None => default_format,
        },
    };
    let precision = file.resolve(out.precision, "precision", default_precision)?;
    if precision == 0 {
        return Err(anyhow!("precision must be at least 1"));
    }
    Ok(RenderOptions { format, precision })
}

fn run_compare(command: CompareCommand, file: &FileConfig) -> Result<()> {
    match command {
        CompareCommand::SweepDelta {
            alpha,
            mu0,
            sigma2,
            delta_min,
            delta_max,
            points,
            out,
        } => {
            let defaults = SweepConfig::delta_sweep_default();
            let config = SweepConfig::new(
                file.resolve(alpha, "alpha", defaults.alpha)?,
                file.resolve(mu0, "mu0", defaults.mu0)?,
                file.resolve(sigma2, "sigma2", defaults.sigma2_fixed)?,
                defaults.delta_fixed,
                GridRange::new(
                    file.resolve(delta_min, "delta-min", defaults.range.start)?,
                    file.resolve(delta_max, "delta-max", defaults.range.end)?,
                    file.resolve(points, "points", defaults.range.points)?,
                )?,
            )?;
            let rendered = render_comparison_points(
                &sweep_delta(&config)?,
                "delta",
                &render_options(&out, file, OutputFormat::Csv, 6)?,
            );
            write_out(out.output.as_ref(), &rendered)
        }
        CompareCommand::SweepSigma2 {
            alpha,
            mu0,
            delta,
            sigma2_min,
            sigma2_max,
            points,
            out,
        } => {
            let defaults = SweepConfig::sigma2_sweep_default();
            let config = SweepConfig::new(
                file.resolve(alpha, "alpha", defaults.alpha)?,
                file.resolve(mu0, "mu0", defaults.mu0)?,
                defaults.sigma2_fixed,
                file.resolve(delta, "delta", defaults.delta_fixed)?,
                GridRange::new(
                    file.resolve(sigma2_min, "sigma2-min", defaults.range.start)?,
                    file.resolve(sigma2_max, "sigma2-max", defaults.range.end)?,
                    file.resolve(points, "points", defaults.range.points)?,
                )?,
            )?;
            let rendered = render_comparison_points(
                &sweep_sigma2(&config)?,
                "sigma2",
                &render_options(&out, file, OutputFormat::Csv, 6)?,
            );
            write_out(out.output.as_ref(), &rendered)
        }
        CompareCommand::SweepPhi {
            alpha,
            mu0,
            sigma2,
            mu_a_min,
            mu_a_max,
            points,
            out,
        } => {
            let defaults = SweepConfig::phi_sweep_default();
            let config = SweepConfig::new(
                file.resolve(alpha, "alpha", defaults.alpha)?,
                file.resolve(mu0, "mu0", defaults.mu0)?,
                file.resolve(sigma2, "sigma2", defaults.sigma2_fixed)?,
                defaults.delta_fixed,
                GridRange::new(
                    file.resolve(mu_a_min, "muA-min", defaults.range.start)?,
                    file.resolve(mu_a_max, "muA-max", defaults.range.end)?,
                    file.resolve(points, "points", defaults.range.points)?,
                )?,
            )?;
            let rendered = render_comparison_points(
                &sweep_phi(&config)?,
                "cohens_d",
                &render_options(&out, file, OutputFormat::Csv, 6)?,
            );
            write_out(out.output.as_ref(), &rendered)
        }
        CompareCommand::CaseF {
            d1,
            d2,
            ncp,
            alpha,
            out,
        } => {
            let alpha = file.resolve(alpha, "alpha", 0.05)?;
            let report = f_case_study(d1, d2, ncp, alpha)?;
            let rendered = render_case_f(
                d1,
                d2,
                ncp,
                alpha,
                &report,
                &render_options(&out, file, OutputFormat::Csv, 6)?,
            );
            write_out(out.output.as_ref(), &rendered)
        }
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    text.split(',')
        .map(|item| {
            item.trim()
                .parse()
                .map_err(|e| anyhow!("invalid {what} entry '{}': {e}", item.trim()))
        })
        .collect()
}

fn run_simulate(args: SimulateArgs, file: &FileConfig) -> Result<()> {
    let seed = match file.resolve_opt(args.seed, "seed")? {
        Some(seed) => seed,
        None => match std::env::var("BIERR_SEED") {
            Ok(raw) => raw.parse().map_err(|e| anyhow!("BIERR_SEED: {e}"))?,
            Err(_) => 0,
        },
    };
    let mut config = SimConfig::default_grid(seed);
    config.replications = file.resolve(args.replications, "M", config.replications)?;
    if let Some(ns) = file.resolve_opt(args.ns, "ns")? {
        config.ns = parse_list(&ns, "ns")?;
    }
    if let Some(mus) = file.resolve_opt(args.mus, "mus")? {
        config.mus = parse_list(&mus, "mus")?;
    }
    if let Some(deltas) = file.resolve_opt(args.deltas, "deltas")? {
        config.deltas = parse_list(&deltas, "deltas")?;
    }
    config.p1 = file.resolve(args.p1, "p1", config.p1)?;
    config.rule_variant = match args.rule {
        Some(rule) => rule.into(),
        None => match file.resolve_opt::<String>(None, "rule")? {
            Some(name) => RuleArg::from_str(&name, true)
                .map_err(|e| anyhow!("config key 'rule': {e}"))?
                .into(),
            None => RuleVariant::AsImplemented,
        },
    };

    let tables = bierr::run_simulation(&config)?;
    let rendered = render_rejection_tables(
        &tables,
        &render_options(&args.out, file, OutputFormat::Markdown, 2)?,
    );
    write_out(args.out.output.as_ref(), &rendered)
}
