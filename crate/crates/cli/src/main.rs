use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use qudit_cost::verify::VerifyOptions;
use serde_json::json;

mod commands;
mod config;
mod table;

use config::{Format, Overrides, RunConfig, CONFIG_ENV};
use table::Table;

#[derive(Parser)]
#[command(name = "qudit-cost", version, about = "Qudit versus qubit fault-tolerant cost tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Break-even synthesis prefactors for one product-formula step.
    PfThresholds(CommonArgs),
    /// Break-even prefactors for the fixed-encoding block encoding.
    LcuTable(CommonArgs),
    /// End-to-end qubit/qudit cost ratio and code-switch budget per d.
    ScanRatio(ScanArgs),
    /// Run the decomposition and coefficient oracle suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// TOML config file with default settings.
    #[arg(long, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    #[arg(long)]
    phi_max: Option<f64>,
    /// Target precision; for end-to-end commands, the simulation error.
    #[arg(long, visible_alias = "eps-sim")]
    eps: Option<f64>,
    /// Evolution time.
    #[arg(long)]
    t: Option<f64>,
    #[arg(long)]
    d_min: Option<usize>,
    #[arg(long)]
    d_max: Option<usize>,
    /// Include every odd d in range.
    #[arg(long, conflicts_with = "primes")]
    all_odd: bool,
    /// Restrict to prime d.
    #[arg(long)]
    primes: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Code switches per query.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, default_value = "qubit-projector")]
    baseline: String,
    #[arg(long, default_value = "qudit-hybrid")]
    candidate: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    phi_max: Option<f64>,
    /// Largest d for the dense-state suites.
    #[arg(long, default_value_t = qudit_cost::simverify::DENSE_DIM_CAP)]
    d_max: usize,
    /// Largest d for the coefficient and census suites.
    #[arg(long, default_value_t = qudit_cost::verify::CENSUS_DIM_CAP)]
    census_max: usize,
    /// Run only these suites (repeatable).
    #[arg(long = "suite")]
    suites: Vec<String>,
    /// Add this offset to every schedule angle (sensitivity check).
    #[arg(long, hide = true, default_value_t = 0.0)]
    perturb: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl CommonArgs {
    fn overrides(&self, k: Option<u32>) -> Overrides {
        Overrides {
            config: self.config.clone(),
            phi_max: self.phi_max,
            eps: self.eps,
            t: self.t,
            d_min: self.d_min,
            d_max: self.d_max,
            prime_only: match (self.all_odd, self.primes) {
                (true, _) => Some(false),
                (_, true) => Some(true),
                _ => None,
            },
            k,
            format: self.format,
        }
    }
}

enum Failure {
    Config(anyhow::Error),
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Config(e)
    }
}

fn emit(table: &Table, format: Format, meta: serde_json::Value, out: Option<&PathBuf>) -> Result<()> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    match format {
        Format::Csv => table.write_csv(&mut sink)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut sink, &table.to_json(meta))?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

fn meta(command: &str, config: impl serde::Serialize) -> serde_json::Value {
    json!({
        "tool": "qudit-cost",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "config": config,
    })
}

fn run_table(
    name: &str,
    args: &CommonArgs,
    k: Option<u32>,
    defaults: RunConfig,
    build: impl FnOnce(&RunConfig) -> Result<Table>,
) -> Result<()> {
    let cfg = RunConfig::load(defaults, &args.overrides(k))?;
    let table = build(&cfg)?;
    emit(&table, cfg.format, meta(name, &cfg), args.out.as_ref())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::PfThresholds(args) => {
            run_table("pf-thresholds", &args, None, RunConfig::primes(19), commands::pf_thresholds)?
        }
        Command::LcuTable(args) => run_table("lcu-table", &args, None, RunConfig::primes(19), commands::lcu_table)?,
        Command::ScanRatio(args) => run_table("scan-ratio", &args.common, args.k, RunConfig::all_odd(51), |cfg| {
            commands::scan_ratio(cfg, &args.baseline, &args.candidate)
        })?,
        Command::Verify(args) => {
            let opts = VerifyOptions {
                phi_max: args.phi_max.unwrap_or(1.0),
                dense_max: args.d_max,
                census_max: args.census_max,
                perturbation: args.perturb,
                ..VerifyOptions::default()
            };
            let (table, reports) = commands::verify(&args.suites, &opts)?;
            emit(&table, args.format, meta("verify", &opts), args.out.as_ref())?;
            let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.suite.as_str()).collect();
            if !failed.is_empty() {
                eprintln!("verification failed: {}", failed.join(", "));
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Config(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
