//! Argument definitions and the subcommand drivers. Every driver returns the
//! full output text so that `main` only decides where it goes.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use newton_cond_core::asymptotics::{
    crossover_vs_pascal, growth_rate, kappa_ratio_series, lower_crossover, optimal_length,
    rate_convergence_series,
};
use newton_cond_core::numerics::{ratio, to_float};
use newton_cond_core::Scalar;
use num_traits::Signed;
use serde::Serialize;

use crate::dump::{write_matrix, MatrixKind};
use crate::format::{parse_rational, render_exact, render_float_sig};
use crate::perturb::{cmd_perturb, PerturbConfig};
use crate::report::{checked_report, csv_header, ConditionRecord};
use crate::table1::cmd_table1;
use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Significant digits for decimal columns.
    #[arg(long, default_value_t = 5)]
    pub digits: usize,
    /// Add exact `p/q` columns where the command has them.
    #[arg(long)]
    pub exact: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(
    name = "newton-cond",
    version,
    about = "Exact conditioning of Newton interpolation at equidistant nodes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// `κ∞(L) / 3^n`
    Ratio,
    /// `κ∞(L)^(1/n)`
    Rate,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// κ∞(L) on [0,1], [0,2] and [0,3] for n in {3,4,5,9,14,19}.
    Table1 {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Condition report for every combination of degrees and lengths.
    Cond {
        /// Degrees: comma-separated values and inclusive ranges `a..b`.
        #[arg(long)]
        n: String,
        /// Lengths as exact rationals (`p/q` or decimals), comma-separated.
        #[arg(long)]
        ell: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Asymptotic growth rate ρ(ℓ) with the optimum and crossover markers.
    Growth {
        /// Lengths, comma-separated. Defaults to 1/4, 1/2, ..., 10.
        #[arg(long)]
        ell: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Seeded perturbation experiment on samples of e^x.
    Perturb {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value = "1")]
        ell: String,
        #[arg(long, default_value_t = 1e-8)]
        eps: f64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Writes one matrix as exact CSV.
    Dump {
        /// L, Linv, pascal, pascal_inv, L3 or D.
        kind: String,
        #[arg(long)]
        n: usize,
        /// Required except for the Pascal matrices.
        #[arg(long)]
        ell: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Limit series `κ∞(L)/3^n` or `κ∞(L)^(1/n)` over a list of degrees.
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "3")]
        ell: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Table1 { output }
            | Command::Cond { output, .. }
            | Command::Growth { output, .. }
            | Command::Perturb { output, .. }
            | Command::Dump { output, .. }
            | Command::Series { output, .. } => output,
        }
    }
}

/// Parses `"3,5,10..12"` into `[3, 5, 10, 11, 12]`.
pub fn parse_degrees(s: &str) -> Result<Vec<usize>> {
    let bad = |part: &str| CliError::Usage(format!("bad degree {part:?}"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| bad(part))?;
                let b: usize = b.trim().parse().map_err(|_| bad(part))?;
                if a > b {
                    return Err(bad(part));
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad(part))?),
        }
    }
    Ok(out)
}

pub fn parse_lengths(s: &str) -> Result<Vec<Scalar>> {
    s.split(',')
        .map(|p| parse_rational(p).map_err(CliError::from))
        .collect()
}

fn positive_length(s: &str) -> Result<Scalar> {
    let l = parse_rational(s)?;
    if !l.is_positive() {
        return Err(CliError::Usage(format!(
            "length must be positive, got {s:?}"
        )));
    }
    Ok(l)
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn run_table1(out: &OutputArgs) -> Result<String> {
    let t = cmd_table1()?;
    match out.format {
        OutputFormat::Csv => Ok(t.to_csv(out.digits, out.exact)),
        OutputFormat::Json => Ok(t.to_json(out.digits, out.exact)? + "\n"),
    }
}

pub fn run_cond(n: &str, ell: &str, out: &OutputArgs) -> Result<String> {
    let degrees = parse_degrees(n)?;
    let lengths = parse_lengths(ell)?;
    let mut records = Vec::with_capacity(degrees.len() * lengths.len());
    for &n in &degrees {
        for l in &lengths {
            let report = checked_report(n, l)?;
            records.push(ConditionRecord::new(&report, out.digits, out.exact));
        }
    }
    match out.format {
        OutputFormat::Json => json(&records),
        OutputFormat::Csv => {
            let mut s = csv_header(out.exact);
            s.push('\n');
            for r in &records {
                s.push_str(&r.csv_row());
                s.push('\n');
            }
            Ok(s)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthRow {
    pub ell: f64,
    pub regime: &'static str,
    pub rate: String,
    pub marker: String,
}

/// One row per requested length plus the three marked lengths, sorted by
/// length. A requested length equal to a marked one shares its row.
pub fn growth_rows(lengths: &[Scalar], digits: usize) -> Result<Vec<GrowthRow>> {
    let mut points: Vec<(f64, Vec<&'static str>)> = Vec::new();
    for l in lengths {
        if !l.is_positive() {
            return Err(CliError::Usage(format!(
                "length must be positive, got {}",
                render_exact(l)
            )));
        }
        points.push((to_float(l), Vec::new()));
    }
    for (x, name) in [
        (lower_crossover(), "lower_crossover"),
        (optimal_length().0, "optimum"),
        (crossover_vs_pascal(), "pascal_crossover"),
    ] {
        match points.iter_mut().find(|(l, _)| *l == x) {
            Some((_, marks)) => marks.push(name),
            None => points.push((x, vec![name])),
        }
    }
    points.sort_by(|a, b| a.0.total_cmp(&b.0));
    points.dedup_by(|b, a| {
        if a.0 == b.0 {
            a.1.append(&mut b.1);
            true
        } else {
            false
        }
    });
    points
        .into_iter()
        .map(|(l, marks)| {
            let g = growth_rate(l)?;
            Ok(GrowthRow {
                ell: l,
                regime: g.regime.name(),
                rate: render_float_sig(g.rate, digits),
                marker: marks.join(";"),
            })
        })
        .collect()
}

pub fn run_growth(ell: Option<&str>, out: &OutputArgs) -> Result<String> {
    let lengths = match ell {
        Some(s) => parse_lengths(s)?,
        None => (1..=40).map(|k| ratio(k, 4)).collect(),
    };
    let rows = growth_rows(&lengths, out.digits)?;
    match out.format {
        OutputFormat::Json => json(&rows),
        OutputFormat::Csv => {
            let mut s = String::from("ell,regime,rate,marker\n");
            for r in &rows {
                s.push_str(&format!("{},{},{},{}\n", r.ell, r.regime, r.rate, r.marker));
            }
            Ok(s)
        }
    }
}

pub fn run_perturb(config: &PerturbConfig, out: &OutputArgs) -> Result<String> {
    let r = cmd_perturb(config)?;
    match out.format {
        OutputFormat::Csv => Ok(r.to_csv(out.digits)),
        OutputFormat::Json => Ok(r.to_json(out.digits)? + "\n"),
    }
}

#[derive(Serialize)]
struct JsonMatrix {
    tag: &'static str,
    n: usize,
    ell: Option<String>,
    rows: Vec<Vec<String>>,
}

pub fn run_dump(kind: &str, n: usize, ell: Option<&str>, out: &OutputArgs) -> Result<String> {
    let kind: MatrixKind = kind.parse()?;
    let length = match (kind.needs_length(), ell) {
        (true, Some(s)) => Some(positive_length(s)?),
        (true, None) => return Err(CliError::Usage(format!("matrix {kind:?} needs --ell"))),
        (false, _) => None,
    };
    let m = kind.build(n, length.as_ref())?;
    match out.format {
        OutputFormat::Csv => Ok(write_matrix(&m, length.as_ref())),
        OutputFormat::Json => json(&JsonMatrix {
            tag: m.tag().name(),
            n: m.n(),
            ell: length.as_ref().map(render_exact),
            rows: (0..m.dim())
                .map(|i| (0..m.dim()).map(|j| render_exact(&m.entry(i, j))).collect())
                .collect(),
        }),
    }
}

#[derive(Serialize)]
struct SeriesRow {
    n: usize,
    value: String,
}

pub fn run_series(kind: SeriesKind, n: &str, ell: &str, out: &OutputArgs) -> Result<String> {
    let degrees = parse_degrees(n)?;
    let length = positive_length(ell)?;
    let values = match kind {
        SeriesKind::Ratio => kappa_ratio_series(&length, &degrees)?,
        SeriesKind::Rate => rate_convergence_series(&length, &degrees)?,
    };
    let rows: Vec<SeriesRow> = values
        .into_iter()
        .map(|(n, v)| SeriesRow {
            n,
            value: render_float_sig(v, out.digits),
        })
        .collect();
    match out.format {
        OutputFormat::Json => json(&rows),
        OutputFormat::Csv => {
            let mut s = String::from("n,value\n");
            for r in &rows {
                s.push_str(&format!("{},{}\n", r.n, r.value));
            }
            Ok(s)
        }
    }
}

pub fn run(command: &Command) -> Result<String> {
    let out = command.output();
    match command {
        Command::Table1 { .. } => run_table1(out),
        Command::Cond { n, ell, .. } => run_cond(n, ell, out),
        Command::Growth { ell, .. } => run_growth(ell.as_deref(), out),
        Command::Perturb {
            n,
            ell,
            eps,
            trials,
            seed,
            ..
        } => run_perturb(
            &PerturbConfig {
                n: *n,
                length: positive_length(ell)?,
                eps: *eps,
                trials: *trials,
                seed: *seed,
            },
            out,
        ),
        Command::Dump { kind, n, ell, .. } => run_dump(kind, *n, ell.as_deref(), out),
        Command::Series { kind, n, ell, .. } => run_series(*kind, n, ell, out),
    }
}

/// Runs the command and writes its output to `--out` or standard output.
pub fn execute(cli: &Cli) -> Result<()> {
    let text = run(&cli.command)?;
    match &cli.command.output().out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn csv() -> OutputArgs {
        OutputArgs {
            digits: 5,
            exact: false,
            format: OutputFormat::Csv,
            out: None,
        }
    }

    #[test]
    fn degree_lists() {
        assert_eq!(parse_degrees("3,5,10..12").unwrap(), vec![3, 5, 10, 11, 12]);
        assert!(parse_degrees("4..2").is_err());
        assert!(parse_degrees("x").is_err());
        assert!(parse_degrees("").is_err());
    }

    #[test]
    fn growth_examples() {
        let text = run_growth(Some("2,3,8"), &csv()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "ell,regime,rate,marker");
        assert!(
            lines[1].starts_with("1.44269504088896") && lines[1].ends_with(",4,lower_crossover")
        );
        assert_eq!(lines[2], "2,1<l<=2,3.2974,");
        assert_eq!(lines[3], "3,l>=2,3,optimum");
        assert!(lines[4].starts_with("7.145") && lines[4].ends_with(",4,pascal_crossover"));
        assert_eq!(lines[5], "8,l>=2,4.2821,");
        assert_eq!(lines.len(), 6);
        assert!(run_growth(Some("0"), &csv()).is_err());
        assert!(run_growth(Some("-1/2"), &csv()).is_err());
    }

    #[test]
    fn cond_sweep() {
        let text = run_cond("3", "1,3", &csv()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "3,1,small,,2.8889,36,104,27");
        assert_eq!(lines[2], "3,3,middle,2,16,2,32,27");
        assert!(matches!(run_cond("0", "1", &csv()), Err(CliError::Core(_))));
        assert!(matches!(
            run_cond("3", "x", &csv()),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn l3_dump_matches_l_dump_at_length_three() {
        let a = run_dump("L3", 3, Some("7"), &csv()).unwrap();
        let b = run_dump("L", 3, Some("3"), &csv()).unwrap();
        assert_eq!(
            a.lines().skip(1).collect::<Vec<_>>(),
            b.lines().skip(1).collect::<Vec<_>>()
        );
        assert!(run_dump("pascal", 2, None, &csv()).is_ok());
        assert!(run_dump("L", 2, None, &csv()).is_err());
        assert!(run_dump("Q", 2, Some("1"), &csv()).is_err());
    }

    #[test]
    fn series_rows() {
        let text = run_series(SeriesKind::Rate, "1..3", "3", &csv()).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(run_series(SeriesKind::Ratio, "5", "0", &csv()).is_err());
    }
}
