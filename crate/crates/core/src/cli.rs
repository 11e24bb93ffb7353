//! Command-line front end. The binary only forwards to [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::audit::{check_criterion, lattice_csv, lattice_report, lattice_table, AuditReport};
use crate::catalog::Catalog;
use crate::groups::Limits;
use crate::invariants::reynolds_basis;
use crate::selftest;
use crate::smoothprobe::ProbeConfig;
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "cubicsym", version, about = "Invariant cubic threefolds of finite linear groups")]
pub struct Cli {
    /// TOML file with defaults for seed, trials, primes and group limits.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Catalog directory (overrides CUBICSYM_CATALOG and the built-in catalog).
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    /// Prime for the smoothness probe (repeatable).
    #[arg(long = "prime")]
    pub primes: Vec<u64>,
    /// Seed for sampling invariant forms.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Samples per prime.
    #[arg(long)]
    pub trials: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Format {
    /// Canonical JSON with sorted keys.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Audit one group: catalog id or path to a group file.
    Audit {
        entry: String,
        #[command(flatten)]
        format: Format,
        #[command(flatten)]
        probe: ProbeArgs,
    },
    /// Audit every two-generated subgroup, one per conjugacy class.
    Lattice {
        entry: String,
        #[command(flatten)]
        format: Format,
        #[command(flatten)]
        probe: ProbeArgs,
    },
    /// Print a basis of the invariant cubic forms.
    Invariants { entry: String },
    /// Inspect the catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Recompute the golden values of the shipped catalog.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    #[serde(default)]
    pub primes: Vec<u64>,
    pub cap: Option<usize>,
    pub order_bound: Option<u32>,
    pub catalog: Option<PathBuf>,
}

impl Config {
    pub fn load(path: &std::path::Path) -> Result<Config> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
    }

    fn probe(&self, args: Option<&ProbeArgs>) -> ProbeConfig {
        let mut c = ProbeConfig::default();
        c.seed = self.seed.unwrap_or(c.seed);
        c.trials = self.trials.unwrap_or(c.trials);
        c.primes = self.primes.clone();
        if let Some(a) = args {
            c.seed = a.seed.unwrap_or(c.seed);
            c.trials = a.trials.unwrap_or(c.trials);
            if !a.primes.is_empty() {
                c.primes = a.primes.clone();
            }
        }
        c
    }

    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits { cap: self.cap.unwrap_or(d.cap), order_bound: self.order_bound.unwrap_or(d.order_bound) }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Exact(_) | Error::BadPrime { .. } => 2,
        _ => 1,
    }
}

fn audit_csv(r: &AuditReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Input(format!("csv: {e}"));
    w.write_record(["group", "order", "dim_U", "commutant", "dim_M", "dim_Z", "criterion"]).map_err(io)?;
    w.write_record([
        r.group_id.clone(),
        r.order.to_string(),
        r.dim_u.to_string(),
        r.commutant_dim.to_string(),
        r.dim_moduli.map_or(String::new(), |m| m.to_string()),
        r.dim_special.to_string(),
        r.criterion_holds.map_or(String::new(), |c| c.to_string()),
    ])
    .map_err(io)?;
    let bytes = w.into_inner().map_err(|e| Error::Input(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let catalog = match cli.catalog.as_ref().or(config.catalog.as_ref()) {
        Some(dir) => Catalog::from_dir(dir),
        None => Catalog::from_env(),
    }
    .with_limits(config.limits());
    let io = |e: std::io::Error| Error::Input(format!("write: {e}"));
    match &cli.command {
        Command::Audit { entry, format, probe } => {
            let e = catalog.load(entry)?;
            let report = check_criterion(&e.file.id, &e.group, &config.probe(Some(probe)))?;
            let text = if format.json {
                report.to_json() + "\n"
            } else if format.csv {
                audit_csv(&report)?
            } else {
                report.to_string()
            };
            out.write_all(text.as_bytes()).map_err(io)?;
        }
        Command::Lattice { entry, format, probe } => {
            let e = catalog.load(entry)?;
            let nodes = lattice_report(&e.group, &config.probe(Some(probe)))?;
            let text = if format.json {
                let v = serde_json::to_value(&nodes).expect("nodes serialize");
                serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
            } else if format.csv {
                lattice_csv(&nodes)?
            } else {
                lattice_table(&nodes)
            };
            out.write_all(text.as_bytes()).map_err(io)?;
        }
        Command::Invariants { entry } => {
            let e = catalog.load(entry)?;
            let s = reynolds_basis(&e.group)?;
            for f in s.basis() {
                writeln!(out, "{f}").map_err(io)?;
            }
        }
        Command::Catalog { action: CatalogCommand::List } => {
            let files = catalog.list()?;
            let w = files.iter().map(|f| f.id.len()).max().unwrap_or(0);
            for f in files {
                let flag = if f.enabled { "" } else { " (disabled)" };
                writeln!(out, "{:<w$}  {:>4}  {}{flag}", f.id, f.contract.order, f.description).map_err(io)?;
            }
        }
        Command::Selftest => {
            let results = selftest::run(&catalog, &config.probe(None));
            let mut failed = 0;
            for r in &results {
                let tag = if r.passed { "ok  " } else { "FAIL" };
                writeln!(out, "{tag} {}: {}", r.name, r.detail).map_err(io)?;
                failed += usize::from(!r.passed);
            }
            writeln!(out, "{} checks, {failed} failed", results.len()).map_err(io)?;
            return Ok(i32::from(failed > 0));
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status: 0 success, 1 contract or golden-value
/// failure, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
