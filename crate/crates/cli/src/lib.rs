//! Command-line front end: runs sweeps or policy comparisons and emits
//! deterministic CSV files (identical configs always produce byte-identical
//! output).

pub mod config;
pub mod emit;

use cfo::{
    compare_policies, list_functions, sweep,EtaRule, FunctionId, KernelConfig64,
    RepositionPolicy64, Scheme, SweepConfig64,
};
use config::Options;
use emit::{fmt_real, write_all, SUMMARY_HEADER};
use std::io::Write;
use std::path::PathBuf;

/// Command failure, split by exit code: usage errors exit with 1, runtime
/// failures with 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }
}

fn kernel_config(opts: &Options) -> KernelConfig64 {
    KernelConfig64 {
        max_steps: opts.max_steps,
        ..KernelConfig64::default()
    }
}

fn policy(scheme: Scheme, opts: &Options) -> RepositionPolicy64 {
    let rule = if opts.eta_zero_compat {
        EtaRule::ZeroCompat
    } else {
        EtaRule::StrictPositive
    };
    RepositionPolicy64::new(scheme).with_eta_rule(rule)
}

/// Sweeps every requested (function, scheme) pair and writes one per-cell
/// CSV per pair plus a combined `summary.csv` (and per-pair trajectory
/// files when requested). Returns the written paths.
pub fn cmd_run(opts: &Options) -> Result<Vec<PathBuf>, CliError> {
    let kernel = kernel_config(opts);
    let mut files: Vec<(PathBuf, String)> = Vec::new();
    let mut summary = String::from(SUMMARY_HEADER);
    for &function in &opts.functions {
        for &scheme in &opts.schemes {
            let config = SweepConfig64 {
                function,
                policy: policy(scheme, opts),
                kernel: kernel.clone(),
                num_gammas: opts.num_gammas,
                noise_seed: opts.seed,
                keep_best_history: opts.emit_trajectories,
            };
            let report = sweep(&config).map_err(|e| CliError::Runtime(e.to_string()))?;
            files.push((
                emit::sweep_path(&opts.out_dir, function, scheme),
                emit::sweep_csv(&report, scheme),
            ));
            if let Some(best_run) = &report.best_history {
                files.push((
                    emit::trajectory_path(&opts.out_dir, function, scheme),
                    emit::trajectory_csv(best_run),
                ));
            }
            summary.push_str(&emit::summary_row(&report, scheme));
        }
    }
    files.push((opts.out_dir.join("summary.csv"), summary));
    write_all(&files)
}

/// Sweeps every function under every scheme (the first scheme is the base)
/// and writes `compare.csv` plus the per-variant speed-change data in
/// `fig_data.csv`. Returns the written paths.
pub fn cmd_compare(opts: &Options) -> Result<Vec<PathBuf>, CliError> {
    if opts.schemes.len() < 2 {
        return Err(CliError::Usage(
            "compare needs at least two --scheme values (the first is the base)".into(),
        ));
    }
    let policies: Vec<RepositionPolicy64> =
        opts.schemes.iter().map(|&s| policy(s, opts)).collect();
    let rows = compare_policies(
        &opts.functions,
        &policies,
        0,
        &kernel_config(opts),
        opts.num_gammas,
        opts.seed,
    )
    .map_err(|e| CliError::Runtime(e.to_string()))?;

    let mut compare = String::from("function,scheme,best_fitness,total_evals,speed_change_vs_base\n");
    let mut fig_data = String::from("function,scheme,speed_change_vs_base\n");
    for (idx, row) in rows.iter().enumerate() {
        compare.push_str(&format!(
            "{},{},{},{},{}\n",
            row.function,
            row.scheme,
            fmt_real(row.best_fitness),
            row.total_evals,
            fmt_real(row.speed_change_vs_base)
        ));
        // rows come back function-major in scheme order; index 0 of each
        // chunk is the base
        if idx % opts.schemes.len() != 0 {
            fig_data.push_str(&format!(
                "{},{},{}\n",
                row.function,
                row.scheme,
                fmt_real(row.speed_change_vs_base)
            ));
        }
    }
    write_all(&[
        (opts.out_dir.join("compare.csv"), compare),
        (opts.out_dir.join("fig_data.csv"), fig_data),
    ])
}

/// Prints the suite listing, sorted by id.
pub fn cmd_list(out: &mut impl Write) -> std::io::Result<()> {
    out.write_all(emit::listing(&list_functions::<f64>()).as_bytes())
}

/// Convenience used by tests: the full per-id listing line.
pub fn listing_line(function: FunctionId) -> String {
    emit::listing(&list_functions::<f64>())
        .lines()
        .find(|l| l.starts_with(&format!("{function} ")))
        .map(str::to_string)
        .unwrap_or_default()
}
