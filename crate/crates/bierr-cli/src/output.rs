//! Table rendering: comparison sweeps and simulation tables to CSV
//! (RFC 4180 quoting) or markdown pipe tables, at a fixed decimal
//! precision. All rendering is pure string building, so identical
//! inputs produce byte-identical output.

use std::fmt::Write as _;

use bierr::{ComparisonPoint, FCaseStudy, RejectionTable, SimMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Markdown,
}

/// Rendering options shared by the tabular commands.
#[derive(Debug, Clone, Copy)]
pub struct RenderOptions {
    pub format: OutputFormat,
    pub precision: usize,
}

fn fixed(value: f64, precision: usize) -> String {
    format!("{value:.precision$}")
}

fn optional(value: Option<f64>, precision: usize) -> String {
    match value {
        Some(v) => fixed(v, precision),
        None => "NA".to_string(),
    }
}

/// Quote a CSV field when it contains a comma, quote, or newline.
fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

fn csv_row(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

fn markdown_row(fields: &[String]) -> String {
    format!("| {} |", fields.join(" | "))
}

fn markdown_rule(columns: usize) -> String {
    format!("|{}", "---:|".repeat(columns))
}

/// Header used by every comparison sweep; only the x column is named
/// per sweep.
pub const COMPARISON_COLUMNS: [&str; 7] = [
    "x",
    "zeta_alpha",
    "zeta_star",
    "xi",
    "omega1",
    "omega2",
    "phi",
];

pub fn render_comparison_points(
    points: &[ComparisonPoint],
    x_label: &str,
    options: &RenderOptions,
) -> String {
    let header: Vec<String> = COMPARISON_COLUMNS
        .iter()
        .map(|&c| {
            if c == "x" {
                x_label.to_string()
            } else {
                c.to_string()
            }
        })
        .collect();
    let rows: Vec<Vec<String>> = points
        .iter()
        .map(|p| {
            vec![
                fixed(p.x_value, options.precision),
                fixed(p.zeta_alpha, options.precision),
                fixed(p.zeta_star, options.precision),
                fixed(p.xi, options.precision),
                optional(p.omega1, options.precision),
                optional(p.omega2, options.precision),
                optional(p.phi, options.precision),
            ]
        })
        .collect();
    let mut out = String::new();
    match options.format {
        OutputFormat::Csv => {
            let _ = writeln!(out, "{}", csv_row(&header));
            for row in rows {
                let _ = writeln!(out, "{}", csv_row(&row));
            }
        }
        OutputFormat::Markdown => {
            let _ = writeln!(out, "{}", markdown_row(&header));
            let _ = writeln!(out, "{}", markdown_rule(header.len()));
            for row in rows {
                let _ = writeln!(out, "{}", markdown_row(&row));
            }
        }
    }
    out
}

pub const CASE_F_COLUMNS: [&str; 12] = [
    "d1",
    "d2",
    "ncp",
    "alpha",
    "threshold_alpha",
    "zeta_alpha",
    "beta_alpha",
    "threshold_star",
    "zeta_star",
    "alpha_star",
    "beta_star",
    "degenerate",
];

pub fn render_case_f(
    d1: u32,
    d2: u32,
    ncp: f64,
    alpha: f64,
    report: &FCaseStudy,
    options: &RenderOptions,
) -> String {
    let header: Vec<String> = CASE_F_COLUMNS.iter().map(|s| s.to_string()).collect();
    let p = options.precision;
    let row = vec![
        d1.to_string(),
        d2.to_string(),
        fixed(ncp, p),
        fixed(alpha, p),
        fixed(report.threshold_alpha, p),
        fixed(report.zeta_alpha, p),
        fixed(report.beta_alpha, p),
        fixed(report.threshold_star, p),
        fixed(report.zeta_star, p),
        fixed(report.alpha_star, p),
        fixed(report.beta_star, p),
        report.degenerate.to_string(),
    ];
    match options.format {
        OutputFormat::Csv => format!("{}\n{}\n", csv_row(&header), csv_row(&row)),
        OutputFormat::Markdown => format!(
            "{}\n{}\n{}\n",
            markdown_row(&header),
            markdown_rule(header.len()),
            markdown_row(&row)
        ),
    }
}

fn method_label(method: SimMethod) -> &'static str {
    match method {
        SimMethod::BiError => "bi-error",
        SimMethod::Nhst => "nhst",
    }
}

/// Render simulation tables. Markdown mirrors the published layout
/// (hypothesized means down the rows, true means across the columns,
/// one table per method and sample size, Monte Carlo error in the
/// footer); CSV is one long cell-per-row table.
pub fn render_rejection_tables(tables: &[RejectionTable], options: &RenderOptions) -> String {
    match options.format {
        OutputFormat::Csv => {
            let mut out = String::new();
            let header = ["method", "n", "mu_hat_a", "mu", "rate", "mc_error"].map(str::to_string);
            let _ = writeln!(out, "{}", csv_row(&header));
            for table in tables {
                for (di, row) in table.rates.iter().enumerate() {
                    let delta_label = table
                        .deltas
                        .get(di)
                        .map(|d| trimmed(*d))
                        .unwrap_or_else(|| "all".to_string());
                    for (mi, &rate) in row.iter().enumerate() {
                        let fields = vec![
                            method_label(table.method).to_string(),
                            table.n.to_string(),
                            delta_label.clone(),
                            trimmed(table.mus[mi]),
                            fixed(rate, options.precision),
                            format!("{:.4}", table.mc_error),
                        ];
                        let _ = writeln!(out, "{}", csv_row(&fields));
                    }
                }
            }
            out
        }
        OutputFormat::Markdown => {
            let mut out = String::new();
            for table in tables {
                let title = match table.method {
                    SimMethod::BiError => "Bi Error method",
                    SimMethod::Nhst => "NHST method",
                };
                let _ = writeln!(out, "## {title}, n = {}\n", table.n);
                let mut header = vec!["mu_hat_A \\ mu".to_string()];
                header.extend(table.mus.iter().map(|m| trimmed(*m)));
                let _ = writeln!(out, "{}", markdown_row(&header));
                let _ = writeln!(out, "{}", markdown_rule(header.len()));
                for (di, row) in table.rates.iter().enumerate() {
                    let mut fields = vec![table
                        .deltas
                        .get(di)
                        .map(|d| trimmed(*d))
                        .unwrap_or_else(|| "(any)".to_string())];
                    fields.extend(row.iter().map(|r| fixed(*r, options.precision)));
                    let _ = writeln!(out, "{}", markdown_row(&fields));
                }
                let _ = writeln!(out, "\nmc_error <= {:.4}\n", table.mc_error);
            }
            out
        }
    }
}

/// Shortest decimal label for a grid value (1.5 not 1.50, 2 not 2.0).
fn trimmed(value: f64) -> String {
    let mut text = format!("{value}");
    if text == "-0" {
        text = "0".to_string();
    }
    text
}
