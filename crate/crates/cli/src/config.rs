//! Flag parsing, the flat key/value config file, and their merge.
//!
//! Precedence: a flag given on the command line overrides the same key in
//! the config file, which overrides the built-in default. File keys mirror
//! the long flag names (`functions`, `scheme`, `repos-interval`, `seed`,
//! `out`, `max-steps`, `num-gammas`, `eta-zero-compat`,
//! `emit-trajectories`).

use crate::CliError;
use cfo::{FunctionId, Scheme};
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(
    name = "cfo",
    version,
    about = "Deterministic central-force optimization benchmark runner"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sweep the (probes-per-dimension, gamma) grid and write per-cell and
    /// summary CSVs.
    Run(CommonArgs),
    /// Sweep several retrieval schemes (first one is the base) and write
    /// comparison CSVs with fractional speed changes.
    Compare(CommonArgs),
    /// List the benchmark functions with dimensions, bounds and maxima.
    List,
}

#[derive(Args, Debug, Default)]
pub struct CommonArgs {
    /// Flat key/value config file; flags override its values.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Benchmark ids ("f1".."f23", comma-separable) or "all".
    #[arg(long, value_delimiter = ',', value_name = "ID")]
    pub functions: Vec<String>,

    /// Retrieval scheme token: "none", "every", "mixed" or "mixed:<k>".
    /// Repeatable; `compare` treats the first as the base.
    #[arg(long = "scheme", value_delimiter = ',', value_name = "SCHEME")]
    pub schemes: Vec<String>,

    /// Interval used by a bare "mixed" scheme token.
    #[arg(long, value_name = "K")]
    pub repos_interval: Option<usize>,

    /// Noise-stream seed for the noisy benchmark.
    #[arg(long, value_name = "N")]
    pub seed: Option<u64>,

    /// Output directory for CSV files.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,

    /// Step budget per run (the noisy benchmark stays capped at 100).
    #[arg(long, value_name = "N")]
    pub max_steps: Option<usize>,

    /// Number of gamma grid points over [0, 1].
    #[arg(long, value_name = "N")]
    pub num_gammas: Option<usize>,

    /// Reproduce the legacy zero-eta boundary-intersection behavior.
    #[arg(long)]
    pub eta_zero_compat: bool,

    /// Also write the winning run's full trajectory per sweep (run only).
    #[arg(long)]
    pub emit_trajectories: bool,
}

/// Fully resolved options shared by `run` and `compare`.
#[derive(Clone, Debug, PartialEq)]
pub struct Options {
    pub functions: Vec<FunctionId>,
    pub schemes: Vec<Scheme>,
    pub seed: u64,
    pub out_dir: PathBuf,
    pub max_steps: usize,
    pub num_gammas: usize,
    pub eta_zero_compat: bool,
    pub emit_trajectories: bool,
}

const FILE_KEYS: [&str; 9] = [
    "functions",
    "scheme",
    "repos-interval",
    "seed",
    "out",
    "max-steps",
    "num-gammas",
    "eta-zero-compat",
    "emit-trajectories",
];

/// Parses a flat `key = value` file ('#' starts a comment).
pub fn parse_config_file(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config file {}: {e}", path.display())))?;
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!(
                "{}:{}: expected `key = value`, got {raw:?}",
                path.display(),
                lineno + 1
            ))
        })?;
        let key = key.trim().to_string();
        if !FILE_KEYS.contains(&key.as_str()) {
            return Err(CliError::Usage(format!(
                "{}:{}: unknown key {key:?}",
                path.display(),
                lineno + 1
            )));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| CliError::Usage(format!("invalid value {value:?} for {key}: {e}")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool, CliError> {
    match value {
        "true" | "1" => Ok(true),
        "false" | "0" => Ok(false),
        _ => Err(CliError::Usage(format!(
            "invalid value {value:?} for {key}: expected true/false"
        ))),
    }
}

/// Parses function tokens, expanding "all", rejecting unknown ids, and
/// normalizing to id order without duplicates.
pub fn parse_functions(tokens: &[String]) -> Result<Vec<FunctionId>, CliError> {
    let mut ids = Vec::new();
    for token in tokens {
        if token == "all" {
            ids.extend_from_slice(&FunctionId::ALL);
        } else {
            ids.push(
                token
                    .parse::<FunctionId>()
                    .map_err(|e| CliError::Usage(e.to_string()))?,
            );
        }
    }
    ids.sort();
    ids.dedup();
    if ids.is_empty() {
        return Err(CliError::Usage(
            "no functions specified (use --functions or a config file)".into(),
        ));
    }
    Ok(ids)
}

/// Parses a scheme token; a bare "mixed" uses `repos_interval`.
pub fn parse_scheme(token: &str, repos_interval: usize) -> Result<Scheme, CliError> {
    if token == "mixed" {
        if repos_interval < 2 {
            return Err(CliError::Usage(format!(
                "repos-interval must be >= 2, got {repos_interval}"
            )));
        }
        return Ok(Scheme::Mixed(repos_interval));
    }
    token
        .parse::<Scheme>()
        .map_err(|e| CliError::Usage(e.to_string()))
}

/// Merges flags over the config file over defaults.
pub fn resolve(args: &CommonArgs) -> Result<Options, CliError> {
    let file = match &args.config {
        Some(path) => parse_config_file(path)?,
        None => BTreeMap::new(),
    };

    let function_tokens: Vec<String> = if !args.functions.is_empty() {
        args.functions.clone()
    } else {
        file.get("functions")
            .map(|v| v.split(',').map(|s| s.trim().to_string()).collect())
            .unwrap_or_default()
    };
    let functions = parse_functions(&function_tokens)?;

    let repos_interval = match (&args.repos_interval, file.get("repos-interval")) {
        (Some(v), _) => *v,
        (None, Some(v)) => parse_value("repos-interval", v)?,
        (None, None) => 2,
    };

    let scheme_tokens: Vec<String> = if !args.schemes.is_empty() {
        args.schemes.clone()
    } else {
        file.get("scheme")
            .map(|v| v.split(',').map(|s| s.trim().to_string()).collect())
            .unwrap_or_else(|| vec!["none".to_string()])
    };
    let schemes = scheme_tokens
        .iter()
        .map(|t| parse_scheme(t, repos_interval))
        .collect::<Result<Vec<_>, _>>()?;

    let seed = match (&args.seed, file.get("seed")) {
        (Some(v), _) => *v,
        (None, Some(v)) => parse_value("seed", v)?,
        (None, None) => 0,
    };
    let out_dir = match (&args.out, file.get("out")) {
        (Some(v), _) => v.clone(),
        (None, Some(v)) => PathBuf::from(v),
        (None, None) => PathBuf::from("out"),
    };
    let max_steps = match (&args.max_steps, file.get("max-steps")) {
        (Some(v), _) => *v,
        (None, Some(v)) => parse_value("max-steps", v)?,
        (None, None) => 1000,
    };
    let num_gammas = match (&args.num_gammas, file.get("num-gammas")) {
        (Some(v), _) => *v,
        (None, Some(v)) => parse_value("num-gammas", v)?,
        (None, None) => 11,
    };
    if num_gammas < 2 {
        return Err(CliError::Usage(format!(
            "num-gammas must be >= 2, got {num_gammas}"
        )));
    }
    if max_steps < 1 {
        return Err(CliError::Usage("max-steps must be >= 1".into()));
    }
    let eta_zero_compat = args.eta_zero_compat
        || file
            .get("eta-zero-compat")
            .map(|v| parse_bool("eta-zero-compat", v))
            .transpose()?
            .unwrap_or(false);
    let emit_trajectories = args.emit_trajectories
        || file
            .get("emit-trajectories")
            .map(|v| parse_bool("emit-trajectories", v))
            .transpose()?
            .unwrap_or(false);

    Ok(Options {
        functions,
        schemes,
        seed,
        out_dir,
        max_steps,
        num_gammas,
        eta_zero_compat,
        emit_trajectories,
    })
}
