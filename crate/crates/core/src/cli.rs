//! Command-line front end. Data goes to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 success, 1 malformed input, 2 a verification failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::genera::{genus_table, z_expand, GenusKind};
use crate::manifolds::{chern_numbers, divisibility_check, index_table, is_spin, ManifoldModel};
use crate::symmetric::render_chern_monomial;
use crate::verify::{verify_range, DimensionReport, Target};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

/// Default ceiling on the complex dimension.
pub const DEFAULT_MAX_N: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "chern-genus",
    version,
    about = "Exact genera as combinations of Chern numbers"
)]
struct Cli {
    /// Largest complex dimension accepted by any subcommand.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    Lemma23,
    TheoremMr,
    LibgoberWood,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    ChiY,
    #[value(name = "a-y")]
    AY,
    #[value(name = "l-y")]
    LY,
}

impl From<KindArg> for GenusKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::ChiY => GenusKind::ChiY,
            KindArg::AY => GenusKind::AY,
            KindArg::LY => GenusKind::LY,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check identities for every n in a range.
    Verify {
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the y-power table of a genus.
    Table {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the expansion of a genus in z = 1 + y.
    Expand {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Chern numbers and evaluated index table of a model.
    Manifold {
        #[arg(long)]
        model: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate 2(n-1)·c1·c_{n-1} + c1^2·c_{n-2} and test divisibility by 8.
    Divisibility {
        #[arg(long)]
        model: String,
        #[arg(long)]
        json: bool,
    },
}

/// Failure carrying the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    }
}

fn io_err(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: format!("write failed: {e}"),
    }
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn check_dimension(n: usize, min: usize, max_n: usize) -> Result<(), Failure> {
    if n < min {
        return Err(usage(format!("n = {n} is below the minimum {min}")));
    }
    if n > max_n {
        return Err(usage(format!("n = {n} exceeds --max-n {max_n}")));
    }
    Ok(())
}

fn load_model(spec: &str, max_n: usize) -> Result<ManifoldModel, Failure> {
    let parsed = match spec.parse::<ManifoldModel>() {
        Ok(m) => m,
        // anything else may name a JSON file
        Err(e) if Path::new(spec).is_file() => {
            let text = std::fs::read_to_string(spec)
                .map_err(|io| usage(format!("{e}; reading file: {io}")))?;
            ManifoldModel::from_json(&text).map_err(internal)?
        }
        Err(e) => return Err(internal(e)),
    };
    check_dimension(parsed.dimension() as usize, 1, max_n)?;
    Ok(parsed)
}

fn to_json_line(value: &impl serde::Serialize) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(internal)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let max_n = cli.max_n;
    match &cli.command {
        Command::Verify {
            target,
            n_min,
            n_max,
            json,
        } => {
            check_dimension(*n_min, 2, max_n)?;
            check_dimension(*n_max, 2, max_n)?;
            if n_min > n_max {
                return Err(usage(format!("--n-min {n_min} exceeds --n-max {n_max}")));
            }
            let targets: Vec<Target> = match target {
                TargetArg::Lemma23 => vec![Target::Lemma23],
                TargetArg::TheoremMr => vec![Target::TheoremMr],
                TargetArg::LibgoberWood => vec![Target::LibgoberWood],
                TargetArg::All => Target::ALL.to_vec(),
            };
            let reports = verify_range(&targets, *n_min..=*n_max).map_err(internal)?;
            if *json {
                let checks: Vec<_> = reports.iter().flat_map(|r| r.checks.iter()).collect();
                writeln!(out, "{}", to_json_line(&checks)?).map_err(io_err)?;
            } else {
                write_verify_text(&reports, out).map_err(io_err)?;
            }
            Ok(if reports.iter().all(DimensionReport::passed) {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Table { kind, n, json } => {
            check_dimension(*n, 1, max_n)?;
            let table = genus_table((*kind).into(), *n).map_err(internal)?;
            if *json {
                writeln!(out, "{}", to_json_line(&table)?).map_err(io_err)?;
            } else {
                writeln!(out, "kind={} n={}", table.kind, table.n).map_err(io_err)?;
                for (p, row) in table.rows.iter().enumerate() {
                    writeln!(out, "row{p}: {row}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Expand {
            kind,
            n,
            order,
            json,
        } => {
            check_dimension(*n, 1, max_n)?;
            let expansion = z_expand((*kind).into(), *n, *order).map_err(internal)?;
            if *json {
                writeln!(out, "{}", to_json_line(&expansion)?).map_err(io_err)?;
            } else {
                writeln!(
                    out,
                    "kind={} n={} order={}",
                    expansion.kind, expansion.n, expansion.order
                )
                .map_err(io_err)?;
                for (k, c) in expansion.coeffs.iter().enumerate() {
                    writeln!(out, "z^{k}: {c}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Manifold { model, kind, json } => {
            let m = load_model(model, max_n)?;
            let numbers = chern_numbers(&m);
            let table = index_table((*kind).into(), &m).map_err(internal)?;
            let spin = is_spin(&m).ok();
            if *json {
                let doc = json!({
                    "model": m.to_string(),
                    "dimension": m.dimension(),
                    "spin": spin,
                    "chern_numbers": m.to_json(),
                    "index_table": table,
                    "all_integral": table.all_integral(),
                });
                writeln!(out, "{}", to_json_line(&doc)?).map_err(io_err)?;
            } else {
                let spin_text = spin.map_or("unknown".to_string(), |s| s.to_string());
                writeln!(out, "model={} n={} spin={}", m, m.dimension(), spin_text)
                    .map_err(io_err)?;
                writeln!(out, "chern numbers:").map_err(io_err)?;
                for (p, v) in &numbers {
                    writeln!(out, "  {} = {v}", render_chern_monomial(p)).map_err(io_err)?;
                }
                writeln!(out, "index table ({}):", table.kind).map_err(io_err)?;
                for e in &table.entries {
                    let flag = if e.integral {
                        "integral"
                    } else {
                        "non-integral"
                    };
                    writeln!(out, "  p={}: {} ({flag})", e.p, e.value).map_err(io_err)?;
                }
                writeln!(out, "all_integral={}", table.all_integral()).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Divisibility { model, json } => {
            let m = load_model(model, max_n)?;
            let record = divisibility_check(&m).map_err(internal)?;
            if *json {
                let mut doc = serde_json::to_value(&record).map_err(internal)?;
                doc["model"] = json!(m.to_string());
                writeln!(out, "{}", to_json_line(&doc)?).map_err(io_err)?;
            } else {
                writeln!(out, "{record}").map_err(io_err)?;
                let spin_text = record.spin.map_or("unknown".to_string(), |s| s.to_string());
                writeln!(out, "spin={spin_text}").map_err(io_err)?;
            }
            let violated = record.spin == Some(true) && !record.divisible_by_8;
            Ok(if violated { EXIT_FAILED } else { EXIT_OK })
        }
    }
}

fn write_verify_text(reports: &[DimensionReport], out: &mut dyn Write) -> std::io::Result<()> {
    for r in reports {
        let passed = r.checks.iter().filter(|c| c.pass).count();
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{status} {} n={} ({passed}/{} identities)",
            r.target,
            r.n,
            r.checks.len()
        )?;
        for c in r.checks.iter().filter(|c| !c.pass) {
            writeln!(out, "  {}: lhs = {}", c.identity, c.lhs)?;
            writeln!(out, "  {}: rhs = {}", c.identity, c.rhs)?;
        }
    }
    Ok(())
}
