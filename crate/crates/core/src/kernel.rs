//! One deterministic optimization run: probe-line initialization, the two
//! equations of motion, best-fitness tracking, periodic decision-space
//! shrinking, and saturation-based early termination.
//!
//! A probe's step-`j` position is its step-`j-1` position plus the
//! acceleration the step-`j-1` probe distribution exerted on it; only
//! fitter probes attract, gated by the unit step.

use crate::benchmarks::{evaluate, EvalError, FunctionId, NoiseSource};
use crate::reposition::{retrieve_errant, RepositionPolicy};
use crate::scalar::Real;
use crate::space::DecisionSpace;

/// Run-level failure.
#[derive(Debug, thiserror::Error)]
pub enum KernelError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("non-finite fitness at probe {probe}, step {step}")]
    NonFiniteFitness { probe: usize, step: usize },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Tunables of a single run. Defaults mirror the reference setup:
/// unit exponents, 1000 steps, shrink by half every 20 steps, and a
/// 25-step saturation window checked only after 10 extra warmup steps.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelConfig<T> {
    pub max_steps: usize,
    pub alpha: T,
    pub beta: T,
    pub shrink_interval: usize,
    pub shrink_factor: T,
    pub saturation_window: usize,
    pub saturation_warmup_extra: usize,
    pub saturation_tol: T,
    pub distance_epsilon: T,
}

impl<T: Real> Default for KernelConfig<T> {
    fn default() -> Self {
        Self {
            max_steps: 1000,
            alpha: T::one(),
            beta: T::one(),
            shrink_interval: 20,
            shrink_factor: T::of(0.5),
            saturation_window: 25,
            saturation_warmup_extra: 10,
            saturation_tol: T::of(1e-6),
            distance_epsilon: T::of(1e-10),
        }
    }
}

impl<T: Real> KernelConfig<T> {
    pub fn validate(&self) -> Result<(), KernelError> {
        if self.max_steps < 1 {
            return Err(KernelError::InvalidConfig("max_steps must be >= 1".into()));
        }
        if self.saturation_window < 1 {
            return Err(KernelError::InvalidConfig(
                "saturation_window must be >= 1".into(),
            ));
        }
        if self.shrink_interval < 1 {
            return Err(KernelError::InvalidConfig(
                "shrink_interval must be >= 1".into(),
            ));
        }
        let factor_ok = self.shrink_factor > T::zero() && self.shrink_factor <= T::one();
        if !factor_ok {
            return Err(KernelError::InvalidConfig(
                "shrink_factor must lie in (0, 1]".into(),
            ));
        }
        if !self.alpha.is_finite() || !self.beta.is_finite() {
            return Err(KernelError::InvalidConfig(
                "alpha and beta must be finite".into(),
            ));
        }
        if !(self.distance_epsilon > T::zero()) {
            return Err(KernelError::InvalidConfig(
                "distance_epsilon must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Best fitness seen so far with the probe and step it occurred at.
/// Ties go to the lexicographically largest `(step, probe)` pair, i.e.
/// scanning steps then probes in ascending order and updating on `>=`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BestRecord<T> {
    pub fitness: T,
    pub probe: usize,
    pub step: usize,
}

/// Full per-step history of one run: positions `R`, accelerations `A` and
/// fitnesses `M`, all step-major, plus the evaluation counter. Rows are
/// appended as the run advances; repositioning may rewrite the last one or
/// two position rows in place.
#[derive(Clone, Debug, PartialEq)]
pub struct RunState<T> {
    num_probes: usize,
    dims: usize,
    positions: Vec<T>,
    accelerations: Vec<T>,
    fitness: Vec<T>,
    eval_count: u64,
}

impl<T: Real> RunState<T> {
    pub fn new(num_probes: usize, dims: usize) -> Self {
        assert!(num_probes > 0 && dims > 0);
        Self {
            num_probes,
            dims,
            positions: Vec::new(),
            accelerations: Vec::new(),
            fitness: Vec::new(),
            eval_count: 0,
        }
    }

    pub fn num_probes(&self) -> usize {
        self.num_probes
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    /// Number of position rows recorded so far.
    pub fn position_steps(&self) -> usize {
        self.positions.len() / (self.num_probes * self.dims)
    }

    /// Number of fitness rows recorded so far.
    pub fn fitness_steps(&self) -> usize {
        self.fitness.len() / self.num_probes
    }

    pub fn eval_count(&self) -> u64 {
        self.eval_count
    }

    pub fn record_evals(&mut self, n: u64) {
        self.eval_count += n;
    }

    pub fn push_positions(&mut self, row: &[T]) {
        assert_eq!(row.len(), self.num_probes * self.dims);
        self.positions.extend_from_slice(row);
    }

    pub fn push_fitness(&mut self, row: &[T]) {
        assert_eq!(row.len(), self.num_probes);
        self.fitness.extend_from_slice(row);
    }

    pub fn push_accelerations(&mut self, row: &[T]) {
        assert_eq!(row.len(), self.num_probes * self.dims);
        self.accelerations.extend_from_slice(row);
    }

    /// All probe positions at step `j`, probe-major.
    pub fn position_row(&self, j: usize) -> &[T] {
        let s = self.num_probes * self.dims;
        &self.positions[j * s..(j + 1) * s]
    }

    /// Position of probe `p` at step `j`.
    pub fn probe_position(&self, p: usize, j: usize) -> &[T] {
        let row = self.position_row(j);
        &row[p * self.dims..(p + 1) * self.dims]
    }

    pub fn position(&self, p: usize, i: usize, j: usize) -> T {
        self.probe_position(p, j)[i]
    }

    pub fn acceleration_row(&self, j: usize) -> &[T] {
        let s = self.num_probes * self.dims;
        &self.accelerations[j * s..(j + 1) * s]
    }

    pub fn fitness_row(&self, j: usize) -> &[T] {
        &self.fitness[j * self.num_probes..(j + 1) * self.num_probes]
    }

    pub fn fitness(&self, p: usize, j: usize) -> T {
        self.fitness[j * self.num_probes + p]
    }

    /// Full rescan over steps `0..=through_step` (ascending, probes
    /// ascending within a step) updating on `>=`. Incremental tracking in
    /// [`run_single`] must agree with this.
    pub fn best_so_far(&self, through_step: usize) -> BestRecord<T> {
        let mut best = BestRecord {
            fitness: T::neg_infinity(),
            probe: 0,
            step: 0,
        };
        for j in 0..=through_step {
            for p in 0..self.num_probes {
                let m = self.fitness(p, j);
                if m >= best.fitness {
                    best = BestRecord {
                        fitness: m,
                        probe: p,
                        step: j,
                    };
                }
            }
        }
        best
    }

    /// Mutable views needed by errant-probe retrieval at step `j`:
    /// the step `j-2` row (if recorded), the step `j-1` and `j` rows, and
    /// the step `j-1` accelerations.
    pub(crate) fn retrieval_views(&mut self, j: usize) -> RetrievalViews<'_, T> {
        assert!(j >= 1 && j < self.position_steps());
        let s = self.num_probes * self.dims;
        let (head, tail) = self.positions.split_at_mut(j * s);
        let row_j = &mut tail[..s];
        let (head2, row_jm1) = head.split_at_mut((j - 1) * s);
        let row_jm2 = if j >= 2 {
            Some(&head2[(j - 2) * s..(j - 1) * s])
        } else {
            None
        };
        let accel_jm1 = &self.accelerations[(j - 1) * s..j * s];
        (row_jm2, row_jm1, row_j, accel_jm1)
    }
}

/// Step `j-2` positions (when recorded), mutable step `j-1` and `j`
/// position rows, and the step `j-1` accelerations.
pub(crate) type RetrievalViews<'a, T> = (Option<&'a [T]>, &'a mut [T], &'a mut [T], &'a [T]);

/// Result of one run: the best record, the step the run stopped at, the
/// number of objective evaluations, and the full trajectory history.
#[derive(Clone, Debug, PartialEq)]
pub struct RunResult<T> {
    pub best: BestRecord<T>,
    pub last_step: usize,
    pub eval_count: u64,
    pub history: RunState<T>,
}

impl<T: Real> RunResult<T> {
    /// Coordinates of the best record's probe at its step.
    pub fn best_position(&self) -> &[T] {
        self.history.probe_position(self.best.probe, self.best.step)
    }
}

/// Unit step: 1 for `z >= 0`, else 0.
pub fn unit_step<T: Real>(z: T) -> T {
    if z >= T::zero() {
        T::one()
    } else {
        T::zero()
    }
}

/// Initial probe distribution on probe lines parallel to the coordinate
/// axes. Every probe starts on the box diagonal at the point selected by
/// `gamma`; then the `probes_per_dim` probes of line `i` get coordinate `i`
/// overwritten with an even grid across that dimension's bounds.
pub fn init_probe_lines<T: Real>(
    space: &DecisionSpace<T>,
    probes_per_dim: usize,
    gamma: T,
) -> Result<Vec<T>, KernelError> {
    let dims = space.dims();
    if probes_per_dim < 2 {
        return Err(KernelError::InvalidConfig(
            "probes_per_dim must be >= 2".into(),
        ));
    }
    if dims > 1 && probes_per_dim % 2 != 0 {
        return Err(KernelError::InvalidConfig(
            "probes_per_dim must be even when there is more than one dimension".into(),
        ));
    }
    if !(gamma >= T::zero() && gamma <= T::one()) {
        return Err(KernelError::InvalidConfig(
            "gamma must lie in [0, 1]".into(),
        ));
    }
    let num_probes = probes_per_dim * dims;
    let (lower, upper) = (space.lower(), space.upper());
    let mut r = vec![T::zero(); num_probes * dims];
    for p in 0..num_probes {
        for i in 0..dims {
            r[p * dims + i] = lower[i] + gamma * (upper[i] - lower[i]);
        }
    }
    for i in 0..dims {
        let delta = (upper[i] - lower[i]) / T::of((probes_per_dim - 1) as f64);
        for k in 0..probes_per_dim {
            let p = k + probes_per_dim * i;
            r[p * dims + i] = lower[i] + T::of(k as f64) * delta;
        }
    }
    // Round-off guard so the distribution starts inside the box even for
    // bounds whose span is not exactly representable.
    for p in 0..num_probes {
        for i in 0..dims {
            let v = &mut r[p * dims + i];
            if *v < lower[i] {
                *v = lower[i];
            } else if *v > upper[i] {
                *v = upper[i];
            }
        }
    }
    Ok(r)
}

/// Accelerations exerted on each probe by the current distribution:
/// for probe `p`, the sum over fitter-or-equal probes `n` of
/// `(M_n - M_p)^alpha * (R_n - R_p) / |R_n - R_p|^beta`. Coalesced probes
/// contribute exactly zero. The summation order is probe-index ascending
/// and fixed, so results are reproducible bit for bit.
pub fn compute_accelerations<T: Real>(
    positions: &[T],
    fitness: &[T],
    dims: usize,
    config: &KernelConfig<T>,
) -> Vec<T> {
    let num_probes = fitness.len();
    debug_assert_eq!(positions.len(), num_probes * dims);
    let mut acc = vec![T::zero(); num_probes * dims];
    for p in 0..num_probes {
        for n in 0..num_probes {
            if n == p {
                continue;
            }
            let dm = fitness[n] - fitness[p];
            if dm < T::zero() {
                continue; // unit step gates out pulls from worse probes
            }
            let mut sum_sq = T::zero();
            for i in 0..dims {
                let d = positions[n * dims + i] - positions[p * dims + i];
                sum_sq += d * d;
            }
            if sum_sq == T::zero() {
                continue; // coalesced probes exert no force
            }
            let num = if config.alpha == T::one() {
                dm
            } else {
                dm.powf(config.alpha)
            };
            let den = if config.beta == T::one() {
                sum_sq.sqrt()
            } else {
                sum_sq.sqrt().powf(config.beta)
            };
            let w = num / den;
            for i in 0..dims {
                acc[p * dims + i] += (positions[n * dims + i] - positions[p * dims + i]) * w;
            }
        }
    }
    acc
}

/// One trajectory step: new position = previous position + acceleration.
pub fn advance_positions<T: Real>(prev: &[T], accel: &[T]) -> Vec<T> {
    debug_assert_eq!(prev.len(), accel.len());
    prev.iter().zip(accel).map(|(&r, &a)| r + a).collect()
}

/// Saturation test at step `j`: false during warmup
/// (`j < window + warmup_extra`); afterwards true when the mean of the
/// per-step best fitnesses over the window ending at `j` agrees with the
/// step-`j` best within tolerance.
pub fn has_saturated<T: Real>(state: &RunState<T>, j: usize, config: &KernelConfig<T>) -> bool {
    let window = config.saturation_window;
    if j < window + config.saturation_warmup_extra {
        return false;
    }
    debug_assert!(j < state.fitness_steps());
    let mut sum = T::zero();
    let mut last = T::neg_infinity();
    for k in (j + 1 - window)..=j {
        let mut best = T::neg_infinity();
        for p in 0..state.num_probes() {
            let m = state.fitness(p, k);
            if m >= best {
                best = m;
            }
        }
        if k == j {
            last = best;
        }
        sum += best;
    }
    (sum / T::of(window as f64) - last).abs() <= config.saturation_tol
}

fn evaluate_step<T: Real>(
    state: &mut RunState<T>,
    function: FunctionId,
    j: usize,
    noise: &mut Option<NoiseSource>,
) -> Result<(), KernelError> {
    let num_probes = state.num_probes();
    let mut row = Vec::with_capacity(num_probes);
    for p in 0..num_probes {
        let m = evaluate(function, state.probe_position(p, j), noise.as_mut())?;
        if !m.is_finite() {
            return Err(KernelError::NonFiniteFitness { probe: p, step: j });
        }
        row.push(m);
    }
    state.push_fitness(&row);
    state.record_evals(num_probes as u64);
    Ok(())
}

fn update_best<T: Real>(best: &mut BestRecord<T>, state: &RunState<T>, j: usize) {
    for p in 0..state.num_probes() {
        let m = state.fitness(p, j);
        if m >= best.fitness {
            *best = BestRecord {
                fitness: m,
                probe: p,
                step: j,
            };
        }
    }
}

fn check_contained<T: Real>(state: &RunState<T>, j: usize, space: &DecisionSpace<T>) {
    let (lower, upper) = (space.lower(), space.upper());
    let dims = state.dims();
    let row = state.position_row(j);
    for p in 0..state.num_probes() {
        for i in 0..dims {
            let v = row[p * dims + i];
            assert!(
                v >= lower[i] && v <= upper[i],
                "errant probe escaped retrieval: probe {p}, step {j}, coordinate {i}: \
                 {v:?} outside [{:?}, {:?}]",
                lower[i],
                upper[i],
            );
        }
    }
}

/// Executes one full run of `max_steps` steps (or fewer on saturation)
/// and returns the best record, last step, evaluation count and history.
/// The caller's `space` is never mutated; the run works on a reset copy.
/// Identical inputs always produce an identical `RunResult`.
pub fn run_single<T: Real>(
    function: FunctionId,
    space: &DecisionSpace<T>,
    probes_per_dim: usize,
    gamma: T,
    policy: &RepositionPolicy<T>,
    config: &KernelConfig<T>,
    mut noise: Option<NoiseSource>,
) -> Result<RunResult<T>, KernelError> {
    config.validate()?;
    policy
        .validate()
        .map_err(|e| KernelError::InvalidConfig(e.to_string()))?;
    let mut space = space.clone();
    space.reset();
    let dims = space.dims();

    let mut state = RunState::new(probes_per_dim * dims, dims);
    state.push_positions(&init_probe_lines(&space, probes_per_dim, gamma)?);
    evaluate_step(&mut state, function, 0, &mut noise)?;
    state.push_accelerations(&vec![T::zero(); state.num_probes() * dims]);

    let mut policy = policy.clone();
    policy.frep = policy.frep_init;

    let mut best = BestRecord {
        fitness: T::neg_infinity(),
        probe: 0,
        step: 0,
    };
    update_best(&mut best, &state, 0);

    let mut last_step = 0;
    for j in 1..=config.max_steps {
        let new_row = advance_positions(state.position_row(j - 1), state.acceleration_row(j - 1));
        state.push_positions(&new_row);
        retrieve_errant(&mut state, j, &space, &policy, config.distance_epsilon);
        check_contained(&state, j, &space);
        evaluate_step(&mut state, function, j, &mut noise)?;
        let acc = compute_accelerations(state.position_row(j), state.fitness_row(j), dims, config);
        state.push_accelerations(&acc);
        update_best(&mut best, &state, j);
        policy.advance_frep();
        if j >= config.shrink_interval && j.is_multiple_of(config.shrink_interval) {
            let best_pos = state.probe_position(best.probe, best.step).to_vec();
            space.shrink_around(&best_pos, config.shrink_factor);
            retrieve_errant(&mut state, j, &space, &policy, config.distance_epsilon);
            check_contained(&state, j, &space);
        }
        last_step = j;
        if has_saturated(&state, j, config) {
            break;
        }
    }

    Ok(RunResult {
        best,
        last_step,
        eval_count: state.eval_count(),
        history: state,
    })
}
