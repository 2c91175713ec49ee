//! Benchmark sweep harness: runs the outer (probes-per-dimension, gamma)
//! grid for one function under one retrieval policy, tracks the overall
//! best with sequential-order tie-breaking, and accumulates the evaluation
//! count used as the convergence-speed currency.

use crate::benchmarks::{spec_of, FunctionId, NoiseSource};
use crate::kernel::{run_single, BestRecord, KernelConfig, KernelError, RunResult};
use crate::reposition::{RepositionPolicy, Scheme};
use crate::scalar::Real;
use rayon::prelude::*;

/// Sweep-level failure, identifying the offending cell where applicable.
#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("invalid sweep input: {0}")]
    InvalidInput(String),
    #[error("run failed at probes_per_dim {probes_per_dim}, gamma index {gamma_index}: {source}")]
    Cell {
        probes_per_dim: usize,
        gamma_index: usize,
        source: KernelError,
    },
}

/// Largest probes-per-dimension tried for a given dimensionality, chosen
/// to keep high-dimensional sweeps affordable.
pub fn max_probes_per_dimension(dims: usize) -> usize {
    match dims {
        1..=6 => 14,
        7..=10 => 12,
        11..=15 => 10,
        16..=20 => 8,
        21..=30 => 6,
        _ => 4,
    }
}

/// One full sweep: which function, the policy template, kernel settings,
/// the gamma grid resolution and the noise seed for the noisy benchmark.
#[derive(Clone, Debug)]
pub struct SweepConfig<T> {
    pub function: FunctionId,
    pub policy: RepositionPolicy<T>,
    pub kernel: KernelConfig<T>,
    pub num_gammas: usize,
    pub noise_seed: u64,
    /// Retain the winning run's full trajectory in the report.
    pub keep_best_history: bool,
}

impl<T: Real> SweepConfig<T> {
    pub fn new(function: FunctionId, scheme: Scheme) -> Self {
        Self {
            function,
            policy: RepositionPolicy::new(scheme),
            kernel: KernelConfig::default(),
            num_gammas: 11,
            noise_seed: 0,
            keep_best_history: false,
        }
    }
}

/// Outcome of one sweep cell.
#[derive(Clone, Debug, PartialEq)]
pub struct CellSummary<T> {
    pub probes_per_dim: usize,
    pub gamma_index: usize,
    pub gamma: T,
    pub best: BestRecord<T>,
    pub last_step: usize,
    pub evals: u64,
}

/// Aggregated sweep result. `best_*` describe the winning cell under the
/// sequential tie rule: cells are ranked in sweep order (probes-per-dim
/// ascending outer, gamma ascending inner) updating on `>=`, so ties go to
/// the later cell.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport<T> {
    pub function: FunctionId,
    pub best_fitness: T,
    pub best_probe: usize,
    pub best_step: usize,
    pub best_probes_per_dim: usize,
    pub best_gamma: T,
    pub total_evals: u64,
    pub runs: Vec<CellSummary<T>>,
    pub best_history: Option<RunResult<T>>,
}

fn gamma_value<T: Real>(index: usize, num_gammas: usize) -> T {
    T::of(index as f64) / T::of((num_gammas - 1) as f64)
}

fn effective_kernel<T: Real>(config: &SweepConfig<T>) -> KernelConfig<T> {
    let mut kernel = config.kernel.clone();
    if config.function == FunctionId::F7 {
        // The noisy benchmark is capped at 100 steps to bound runtime.
        kernel.max_steps = kernel.max_steps.min(100);
    }
    kernel
}

/// Runs the full grid. Cells execute concurrently on the ambient rayon
/// pool; aggregation replays sequential sweep order, so the report is
/// identical for any thread count.
pub fn sweep<T: Real>(config: &SweepConfig<T>) -> Result<SweepReport<T>, SweepError> {
    if config.num_gammas < 2 {
        return Err(SweepError::InvalidInput("num_gammas must be >= 2".into()));
    }
    config
        .kernel
        .validate()
        .map_err(|e| SweepError::InvalidInput(e.to_string()))?;
    config
        .policy
        .validate()
        .map_err(|e| SweepError::InvalidInput(e.to_string()))?;

    let bench = spec_of::<T>(config.function);
    let space = bench.space();
    let kernel = effective_kernel(config);
    let max_ppd = max_probes_per_dimension(bench.dims);

    let mut cells = Vec::new();
    let mut ppd = 2;
    while ppd <= max_ppd {
        for g in 0..config.num_gammas {
            cells.push((ppd, g));
        }
        ppd += 2;
    }

    let run_cell = |&(ppd, g): &(usize, usize)| -> Result<CellSummary<T>, SweepError> {
        let gamma = gamma_value::<T>(g, config.num_gammas);
        let noise = bench
            .noisy
            .then(|| NoiseSource::for_cell(config.noise_seed, ppd, g));
        let run = run_single(
            config.function,
            &space,
            ppd,
            gamma,
            &config.policy,
            &kernel,
            noise,
        )
        .map_err(|source| SweepError::Cell {
            probes_per_dim: ppd,
            gamma_index: g,
            source,
        })?;
        Ok(CellSummary {
            probes_per_dim: ppd,
            gamma_index: g,
            gamma,
            best: run.best,
            last_step: run.last_step,
            evals: run.eval_count,
        })
    };

    let outcomes: Vec<Result<CellSummary<T>, SweepError>> =
        cells.par_iter().map(run_cell).collect();
    let mut runs = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        runs.push(outcome?);
    }

    let mut report = aggregate(config.function, runs);
    if config.keep_best_history {
        // Re-running the winning cell reproduces its trajectory exactly,
        // so only one full history is ever held.
        let noise = bench.noisy.then(|| {
            NoiseSource::for_cell(
                config.noise_seed,
                report.best_probes_per_dim,
                best_gamma_index(&report),
            )
        });
        let rerun = run_single(
            config.function,
            &space,
            report.best_probes_per_dim,
            report.best_gamma,
            &config.policy,
            &kernel,
            noise,
        )
        .map_err(|source| SweepError::Cell {
            probes_per_dim: report.best_probes_per_dim,
            gamma_index: best_gamma_index(&report),
            source,
        })?;
        report.best_history = Some(rerun);
    }
    Ok(report)
}

fn best_gamma_index<T: Real>(report: &SweepReport<T>) -> usize {
    report
        .runs
        .iter()
        .find(|c| {
            c.probes_per_dim == report.best_probes_per_dim
                && c.gamma == report.best_gamma
        })
        .map(|c| c.gamma_index)
        .unwrap_or(0)
}

fn aggregate<T: Real>(function: FunctionId, runs: Vec<CellSummary<T>>) -> SweepReport<T> {
    let mut best_fitness = T::neg_infinity();
    let mut best_probe = 0;
    let mut best_step = 0;
    let mut best_probes_per_dim = 0;
    let mut best_gamma = T::zero();
    let mut total_evals = 0u64;
    for cell in &runs {
        total_evals += cell.evals;
        if cell.best.fitness >= best_fitness {
            best_fitness = cell.best.fitness;
            best_probe = cell.best.probe;
            best_step = cell.best.step;
            best_probes_per_dim = cell.probes_per_dim;
            best_gamma = cell.gamma;
        }
    }
    SweepReport {
        function,
        best_fitness,
        best_probe,
        best_step,
        best_probes_per_dim,
        best_gamma,
        total_evals,
        runs,
        best_history: None,
    }
}

/// Fractional change in evaluations, `1 - variant / base`: positive means
/// the variant converged faster, negative slower.
pub fn fractional_speed_change<T: Real>(
    n_eval_base: u64,
    n_eval_variant: u64,
) -> Result<T, SweepError> {
    if n_eval_base == 0 {
        return Err(SweepError::InvalidInput(
            "baseline evaluation count must be positive".into(),
        ));
    }
    Ok(T::one() - T::of(n_eval_variant as f64) / T::of(n_eval_base as f64))
}

/// One (function, policy) entry of a policy comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonRow<T> {
    pub function: FunctionId,
    pub scheme: Scheme,
    pub best_fitness: T,
    pub total_evals: u64,
    pub speed_change_vs_base: T,
}

/// Sweeps every (function, policy) pair and reports per-function best
/// fitness, evaluation count and the fractional speed change against the
/// base policy. Rows are ordered function-major in the order given.
pub fn compare_policies<T: Real>(
    functions: &[FunctionId],
    policies: &[RepositionPolicy<T>],
    base_index: usize,
    kernel: &KernelConfig<T>,
    num_gammas: usize,
    noise_seed: u64,
) -> Result<Vec<ComparisonRow<T>>, SweepError> {
    if policies.len() < 2 {
        return Err(SweepError::InvalidInput(
            "a comparison needs at least two policies".into(),
        ));
    }
    if base_index >= policies.len() {
        return Err(SweepError::InvalidInput(format!(
            "base policy index {base_index} out of range"
        )));
    }
    let mut rows = Vec::with_capacity(functions.len() * policies.len());
    for &function in functions {
        let reports: Vec<SweepReport<T>> = policies
            .iter()
            .map(|policy| {
                sweep(&SweepConfig {
                    function,
                    policy: policy.clone(),
                    kernel: kernel.clone(),
                    num_gammas,
                    noise_seed,
                    keep_best_history: false,
                })
            })
            .collect::<Result<_, _>>()?;
        let base_evals = reports[base_index].total_evals;
        for (policy, report) in policies.iter().zip(&reports) {
            rows.push(ComparisonRow {
                function,
                scheme: policy.scheme,
                best_fitness: report.best_fitness,
                total_evals: report.total_evals,
                speed_change_vs_base: fractional_speed_change(base_evals, report.total_evals)?,
            });
        }
    }
    Ok(rows)
}
