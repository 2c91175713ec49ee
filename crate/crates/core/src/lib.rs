//! Deterministic central-force optimization engine with a benchmark harness.
//!
//! The engine flies a population of probes through a box-bounded decision
//! space under gravity-like kinematics: probes accelerate toward fitter
//! probes, step by adding the acceleration to the position, and are
//! retrieved when they leave the box. Everything is deterministic — the
//! same setup always reproduces the same trajectories bit for bit — which
//! makes single runs comparable across retrieval policies.
//!
//! Crate layout:
//!
//! * [`benchmarks`] — the 23 classical test functions (negated, the engine
//!   maximizes) with bounds and reference maxima, plus the seeded noise
//!   stream for the quartic benchmark.
//! * [`kernel`] — one run: probe-line initialization, equations of motion,
//!   best tracking, decision-space shrinking, saturation termination.
//! * [`reposition`] — the errant-probe retrieval policies and the cycling
//!   repositioning factor.
//! * [`harness`] — the (probes-per-dimension, gamma) sweep grid, the
//!   evaluation-count metric and policy comparisons.
//!
//! All numerics are generic over the scalar type via [`scalar::Real`]
//! (`f32` or `f64`); the aliases below fix the double-precision
//! instantiation the harness and CLI run at.

pub mod benchmarks;
pub mod harness;
pub mod kernel;
pub mod reposition;
pub mod scalar;
pub mod space;

pub use benchmarks::{
    evaluate, list_functions, spec_of, BenchmarkSpec, EvalError, FunctionGroup, FunctionId,
    NoiseSource,
};
pub use harness::{
    compare_policies, fractional_speed_change, max_probes_per_dimension, sweep, CellSummary,
    ComparisonRow, SweepConfig, SweepError, SweepReport,
};
pub use kernel::{
    advance_positions, compute_accelerations, has_saturated, init_probe_lines, run_single,
    unit_step, BestRecord, KernelConfig, KernelError, RunResult, RunState,
};
pub use reposition::{
    clamp_coordinatewise, line_box_exit, line_box_exit_with, reposition_directional,
    retrieve_errant, BoundaryExit, DegenerateExit, EtaRule, RepositionPolicy, Scheme,
};
pub use scalar::Real;
pub use space::{DecisionSpace, SpaceError};

/// Double-precision aliases for the main types.
pub type DecisionSpace64 = DecisionSpace<f64>;
pub type BenchmarkSpec64 = BenchmarkSpec<f64>;
pub type KernelConfig64 = KernelConfig<f64>;
pub type RunState64 = RunState<f64>;
pub type RunResult64 = RunResult<f64>;
pub type BestRecord64 = BestRecord<f64>;
pub type RepositionPolicy64 = RepositionPolicy<f64>;
pub type BoundaryExit64 = BoundaryExit<f64>;
pub type SweepConfig64 = SweepConfig<f64>;
pub type SweepReport64 = SweepReport<f64>;
pub type CellSummary64 = CellSummary<f64>;
