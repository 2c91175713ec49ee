//! Deterministic CSV emission: '.' decimal separator, '\n' line endings,
//! no timestamps, floats printed with 17 significant digits so files are
//! byte-stable and parse back to the exact same values.

use crate::CliError;
use std::path::{Path, PathBuf};

/// 17 significant digits, enough to round-trip any f64 exactly.
pub fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes all files, removing everything already written on failure so no
/// partial output survives.
pub fn write_all(files: &[(PathBuf, String)]) -> Result<Vec<PathBuf>, CliError> {
    let mut written: Vec<PathBuf> = Vec::with_capacity(files.len());
    for (path, contents) in files {
        if let Some(dir) = path.parent() {
            if let Err(e) = std::fs::create_dir_all(dir) {
                remove_best_effort(&written);
                return Err(CliError::Runtime(format!(
                    "cannot create {}: {e}",
                    dir.display()
                )));
            }
        }
        if let Err(e) = std::fs::write(path, contents) {
            written.push(path.clone());
            remove_best_effort(&written);
            return Err(CliError::Runtime(format!(
                "cannot write {}: {e}",
                path.display()
            )));
        }
        written.push(path.clone());
    }
    Ok(written)
}

fn remove_best_effort(paths: &[PathBuf]) {
    for path in paths {
        let _ = std::fs::remove_file(path);
    }
}

/// `sweep_<fn>_<scheme>.csv` body: one row per grid cell.
pub fn sweep_csv(report: &cfo::SweepReport64, scheme: cfo::Scheme) -> String {
    let mut out =
        String::from("function,scheme,probes_per_dim,gamma,best_fitness,best_step,last_step,evals\n");
    for cell in &report.runs {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            report.function,
            scheme,
            cell.probes_per_dim,
            fmt_real(cell.gamma),
            fmt_real(cell.best.fitness),
            cell.best.step,
            cell.last_step,
            cell.evals
        ));
    }
    out
}

/// One `summary.csv` row.
pub fn summary_row(report: &cfo::SweepReport64, scheme: cfo::Scheme) -> String {
    format!(
        "{},{},{},{},{},{}\n",
        report.function,
        scheme,
        fmt_real(report.best_fitness),
        report.best_probes_per_dim,
        fmt_real(report.best_gamma),
        report.total_evals
    )
}

pub const SUMMARY_HEADER: &str =
    "function,scheme,best_fitness,best_probes_per_dim,best_gamma,total_evals\n";

/// `trajectories_<fn>_<scheme>.csv` body: the winning run's full history.
pub fn trajectory_csv(result: &cfo::RunResult64) -> String {
    let history = &result.history;
    let dims = history.dims();
    let mut out = String::from("step,probe,fitness");
    for i in 1..=dims {
        out.push_str(&format!(",x{i}"));
    }
    out.push('\n');
    for step in 0..history.fitness_steps() {
        for probe in 0..history.num_probes() {
            out.push_str(&format!("{step},{probe},{}", fmt_real(history.fitness(probe, step))));
            for &x in history.probe_position(probe, step) {
                out.push(',');
                out.push_str(&fmt_real(x));
            }
            out.push('\n');
        }
    }
    out
}

/// Human-oriented listing of the benchmark suite.
pub fn listing(specs: &[cfo::BenchmarkSpec64]) -> String {
    let mut out = String::from("id    name                    dims  bounds                 max\n");
    for spec in specs {
        out.push_str(&format!(
            "{:<5} {:<23} {:>4}  {:<22} {}\n",
            spec.id.to_string(),
            spec.name,
            spec.dims,
            bounds_text(spec),
            spec.known_max
        ));
    }
    out
}

fn bounds_text(spec: &cfo::BenchmarkSpec64) -> String {
    let uniform = spec.lower.windows(2).all(|w| w[0] == w[1])
        && spec.upper.windows(2).all(|w| w[0] == w[1]);
    if uniform {
        format!("[{}, {}]^{}", spec.lower[0], spec.upper[0], spec.dims)
    } else {
        spec.lower
            .iter()
            .zip(&spec.upper)
            .map(|(lo, hi)| format!("[{lo}, {hi}]"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// File-name fragment for a scheme token.
pub fn scheme_file_token(scheme: cfo::Scheme) -> String {
    scheme.to_string()
}

pub fn sweep_path(dir: &Path, function: cfo::FunctionId, scheme: cfo::Scheme) -> PathBuf {
    dir.join(format!("sweep_{function}_{}.csv", scheme_file_token(scheme)))
}

pub fn trajectory_path(dir: &Path, function: cfo::FunctionId, scheme: cfo::Scheme) -> PathBuf {
    dir.join(format!(
        "trajectories_{function}_{}.csv",
        scheme_file_token(scheme)
    ))
}
