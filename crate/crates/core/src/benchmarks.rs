//! The 23-function benchmark suite behind a uniform evaluation contract.
//!
//! All functions are the classical minimization benchmarks (sphere through
//! the Shekel family); `evaluate` returns the *negated* value because the
//! engine maximizes. The only stochastic member is `f7` (quartic with
//! additive noise), which draws from an explicitly-passed, seeded
//! [`NoiseSource`] so that runs stay reproducible.

use crate::scalar::Real;
use crate::space::DecisionSpace;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

/// Benchmark identifiers, in suite order. CLI/config tokens are the
/// lowercase forms `"f1"`..`"f23"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum FunctionId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
    F20,
    F21,
    F22,
    F23,
}

/// Landscape class of a benchmark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionGroup {
    Unimodal,
    MultimodalMany,
    MultimodalFew,
}

impl FunctionId {
    pub const ALL: [FunctionId; 23] = [
        FunctionId::F1,
        FunctionId::F2,
        FunctionId::F3,
        FunctionId::F4,
        FunctionId::F5,
        FunctionId::F6,
        FunctionId::F7,
        FunctionId::F8,
        FunctionId::F9,
        FunctionId::F10,
        FunctionId::F11,
        FunctionId::F12,
        FunctionId::F13,
        FunctionId::F14,
        FunctionId::F15,
        FunctionId::F16,
        FunctionId::F17,
        FunctionId::F18,
        FunctionId::F19,
        FunctionId::F20,
        FunctionId::F21,
        FunctionId::F22,
        FunctionId::F23,
    ];

    /// Zero-based position in suite order.
    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&f| f == self).unwrap()
    }

    /// Number of decision variables.
    pub fn dims(self) -> usize {
        use FunctionId::*;
        match self {
            F1 | F2 | F3 | F4 | F5 | F6 | F7 | F8 | F9 | F10 | F11 | F12 | F13 => 30,
            F14 | F16 | F17 | F18 => 2,
            F19 => 3,
            F15 | F21 | F22 | F23 => 4,
            F20 => 6,
        }
    }

    /// Whether evaluation draws from a noise stream (only `f7`).
    pub fn noisy(self) -> bool {
        self == FunctionId::F7
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.index() + 1)
    }
}

/// Unknown benchmark token.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("unknown function id {0:?} (expected \"f1\"..\"f23\")")]
pub struct ParseFunctionIdError(pub String);

impl FromStr for FunctionId {
    type Err = ParseFunctionIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let n: usize = lower
            .strip_prefix('f')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| ParseFunctionIdError(s.to_string()))?;
        if (1..=23).contains(&n) {
            Ok(FunctionId::ALL[n - 1])
        } else {
            Err(ParseFunctionIdError(s.to_string()))
        }
    }
}

/// A benchmark's identity: dimensionality, box bounds, the best objective
/// value listed for it, and whether it is noisy.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchmarkSpec<T> {
    pub id: FunctionId,
    pub name: &'static str,
    pub dims: usize,
    pub lower: Vec<T>,
    pub upper: Vec<T>,
    pub known_max: T,
    pub noisy: bool,
    pub group: FunctionGroup,
}

impl<T: Real> BenchmarkSpec<T> {
    /// The search box for this benchmark.
    pub fn space(&self) -> DecisionSpace<T> {
        DecisionSpace::new(self.lower.clone(), self.upper.clone())
            .expect("benchmark bounds are valid")
    }
}

/// Full description of one benchmark.
pub fn spec_of<T: Real>(id: FunctionId) -> BenchmarkSpec<T> {
    use FunctionGroup::*;
    use FunctionId::*;
    let (name, bound, known_max, group) = match id {
        F1 => ("Sphere", 100.0, 0.0, Unimodal),
        F2 => ("Schwefel 2.22", 10.0, 0.0, Unimodal),
        F3 => ("Schwefel 1.2", 100.0, 0.0, Unimodal),
        F4 => ("Schwefel 2.21", 100.0, 0.0, Unimodal),
        F5 => ("Rosenbrock", 30.0, 0.0, Unimodal),
        F6 => ("Step", 100.0, 0.0, Unimodal),
        F7 => ("Quartic with noise", 1.28, 0.0, Unimodal),
        F8 => ("Schwefel 2.26", 500.0, 12_569.5, MultimodalMany),
        F9 => ("Rastrigin", 5.12, 0.0, MultimodalMany),
        F10 => ("Ackley", 32.0, 0.0, MultimodalMany),
        F11 => ("Griewank", 600.0, 0.0, MultimodalMany),
        F12 => ("Penalized 1", 50.0, 0.0, MultimodalMany),
        F13 => ("Penalized 2", 50.0, 0.0, MultimodalMany),
        F14 => ("Shekel's Foxholes", 65.536, -1.0, MultimodalFew),
        F15 => ("Kowalik", 5.0, -3.075e-4, MultimodalFew),
        F16 => ("Six-Hump Camel-Back", 5.0, 1.031_628_5, MultimodalFew),
        F17 => ("Branin", f64::NAN, -0.398, MultimodalFew), // bounds set below
        F18 => ("Goldstein-Price", 2.0, -3.0, MultimodalFew),
        F19 => ("Hartman 3", f64::NAN, 3.86, MultimodalFew), // [0,1]^3
        F20 => ("Hartman 6", f64::NAN, 3.32, MultimodalFew), // [0,1]^6
        F21 => ("Shekel 5", f64::NAN, 10.0, MultimodalFew),  // [0,10]^4
        F22 => ("Shekel 7", f64::NAN, 10.0, MultimodalFew),
        F23 => ("Shekel 10", f64::NAN, 10.0, MultimodalFew),
    };
    let dims = id.dims();
    let (lower, upper) = match id {
        F17 => (vec![T::of(-5.0), T::zero()], vec![T::of(10.0), T::of(15.0)]),
        F19 | F20 => (vec![T::zero(); dims], vec![T::one(); dims]),
        F21 | F22 | F23 => (vec![T::zero(); dims], vec![T::of(10.0); dims]),
        _ => (vec![T::of(-bound); dims], vec![T::of(bound); dims]),
    };
    BenchmarkSpec {
        id,
        name,
        dims,
        lower,
        upper,
        known_max: T::of(known_max),
        noisy: id.noisy(),
        group,
    }
}

/// All 23 specs in id order; stable across calls.
pub fn list_functions<T: Real>() -> Vec<BenchmarkSpec<T>> {
    FunctionId::ALL.iter().map(|&id| spec_of(id)).collect()
}

/// Deterministic uniform-noise stream for the quartic benchmark. The same
/// seed always yields the same sequence, so noisy runs replay exactly.
#[derive(Clone, Debug)]
pub struct NoiseSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl NoiseSource {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0, 0)
    }

    /// Stream derived from the sweep cell coordinates, so cell results do
    /// not depend on execution order.
    pub fn for_cell(seed: u64, probes_per_dim: usize, gamma_index: usize) -> Self {
        Self::with_stream(seed, probes_per_dim as u64, gamma_index as u64)
    }

    fn with_stream(seed: u64, a: u64, b: u64) -> Self {
        let mut key = [0u8; 32];
        key[0..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&a.to_le_bytes());
        key[16..24].copy_from_slice(&b.to_le_bytes());
        Self {
            seed,
            rng: ChaCha8Rng::from_seed(key),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Next uniform draw in `[0, 1)` with 53 bits of precision.
    pub fn next_unit<T: Real>(&mut self) -> T {
        let u = self.rng.next_u64() >> 11;
        T::of(u as f64 * (1.0 / (1u64 << 53) as f64))
    }
}

/// Invalid evaluation input.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("{id} expects {expected} coordinates, got {got}")]
    DimensionMismatch {
        id: FunctionId,
        expected: usize,
        got: usize,
    },
    #[error("coordinate {index} is not finite")]
    NonFiniteCoordinate { index: usize },
    #[error("{id} {}", if *.noisy { "requires a noise source" } else { "does not take a noise source" })]
    NoiseMismatch { id: FunctionId, noisy: bool },
}

/// Evaluates benchmark `id` at `x` and returns the negated objective value
/// (the engine maximizes). Deterministic for every non-noisy id; for `f7`
/// the result is determined by the supplied noise stream's state.
pub fn evaluate<T: Real>(
    id: FunctionId,
    x: &[T],
    noise: Option<&mut NoiseSource>,
) -> Result<T, EvalError> {
    let dims = id.dims();
    if x.len() != dims {
        return Err(EvalError::DimensionMismatch {
            id,
            expected: dims,
            got: x.len(),
        });
    }
    if let Some(index) = x.iter().position(|v| !v.is_finite()) {
        return Err(EvalError::NonFiniteCoordinate { index });
    }
    if noise.is_some() != id.noisy() {
        return Err(EvalError::NoiseMismatch {
            id,
            noisy: id.noisy(),
        });
    }
    use FunctionId::*;
    let value = match id {
        F1 => sphere(x),
        F2 => schwefel_2_22(x),
        F3 => schwefel_1_2(x),
        F4 => schwefel_2_21(x),
        F5 => rosenbrock(x),
        F6 => step(x),
        F7 => quartic(x) + noise.unwrap().next_unit(),
        F8 => schwefel_2_26(x),
        F9 => rastrigin(x),
        F10 => ackley(x),
        F11 => griewank(x),
        F12 => penalized_1(x),
        F13 => penalized_2(x),
        F14 => foxholes(x),
        F15 => kowalik(x),
        F16 => six_hump_camel(x),
        F17 => branin(x),
        F18 => goldstein_price(x),
        F19 => hartman(x, &HARTMAN3_A, &HARTMAN3_P),
        F20 => hartman(x, &HARTMAN6_A, &HARTMAN6_P),
        F21 => shekel(x, 5),
        F22 => shekel(x, 7),
        F23 => shekel(x, 10),
    };
    Ok(-value)
}

fn sphere<T: Real>(x: &[T]) -> T {
    x.iter().map(|&v| v * v).fold(T::zero(), |a, b| a + b)
}

fn schwefel_2_22<T: Real>(x: &[T]) -> T {
    let sum = x.iter().map(|v| v.abs()).fold(T::zero(), |a, b| a + b);
    let prod = x.iter().map(|v| v.abs()).fold(T::one(), |a, b| a * b);
    sum + prod
}

fn schwefel_1_2<T: Real>(x: &[T]) -> T {
    let mut prefix = T::zero();
    let mut total = T::zero();
    for &v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

fn schwefel_2_21<T: Real>(x: &[T]) -> T {
    x.iter().map(|v| v.abs()).fold(T::zero(), T::max)
}

fn rosenbrock<T: Real>(x: &[T]) -> T {
    let hundred = T::of(100.0);
    let mut total = T::zero();
    for w in x.windows(2) {
        let a = w[1] - w[0] * w[0];
        let b = w[0] - T::one();
        total += hundred * a * a + b * b;
    }
    total
}

fn step<T: Real>(x: &[T]) -> T {
    let half = T::of(0.5);
    x.iter()
        .map(|&v| {
            let f = (v + half).floor();
            f * f
        })
        .fold(T::zero(), |a, b| a + b)
}

/// Quartic sum with 1-based coefficients; the uniform noise term is added
/// by the caller.
fn quartic<T: Real>(x: &[T]) -> T {
    x.iter()
        .enumerate()
        .map(|(i, &v)| T::of((i + 1) as f64) * v * v * v * v)
        .fold(T::zero(), |a, b| a + b)
}

fn schwefel_2_26<T: Real>(x: &[T]) -> T {
    -x.iter()
        .map(|&v| v * v.abs().sqrt().sin())
        .fold(T::zero(), |a, b| a + b)
}

fn rastrigin<T: Real>(x: &[T]) -> T {
    let ten = T::of(10.0);
    let two_pi = T::of(2.0) * T::PI();
    x.iter()
        .map(|&v| v * v - ten * (two_pi * v).cos() + ten)
        .fold(T::zero(), |a, b| a + b)
}

fn ackley<T: Real>(x: &[T]) -> T {
    let n = T::of(x.len() as f64);
    let twenty = T::of(20.0);
    let two_pi = T::of(2.0) * T::PI();
    let sum_sq = x.iter().map(|&v| v * v).fold(T::zero(), |a, b| a + b);
    let sum_cos = x
        .iter()
        .map(|&v| (two_pi * v).cos())
        .fold(T::zero(), |a, b| a + b);
    -twenty * (-T::of(0.2) * (sum_sq / n).sqrt()).exp() - (sum_cos / n).exp() + twenty + T::E()
}

fn griewank<T: Real>(x: &[T]) -> T {
    let sum = x.iter().map(|&v| v * v).fold(T::zero(), |a, b| a + b) / T::of(4000.0);
    let prod = x
        .iter()
        .enumerate()
        .map(|(i, &v)| (v / T::of(((i + 1) as f64).sqrt())).cos())
        .fold(T::one(), |a, b| a * b);
    sum - prod + T::one()
}

/// Boundary penalty `u(x, a, k, m)`: `k(x-a)^m` above `a`, `k(-x-a)^m`
/// below `-a`, zero in between. Both penalized benchmarks use k = 100,
/// m = 4; `f12` uses a = 10 and `f13` uses a = 5.
fn penalty<T: Real>(v: T, a: T, k: T) -> T {
    if v > a {
        let d = v - a;
        k * d * d * d * d
    } else if v < -a {
        let d = -v - a;
        k * d * d * d * d
    } else {
        T::zero()
    }
}

/// Penalized function 1 over `y_i = 1 + (x_i + 1)/4`, plus `u(x_i, 10, 100, 4)`.
fn penalized_1<T: Real>(x: &[T]) -> T {
    let n = T::of(x.len() as f64);
    let pi = T::PI();
    let ten = T::of(10.0);
    let quarter = T::of(0.25);
    let y = |v: T| T::one() + (v + T::one()) * quarter;
    let mut core = ten * (pi * y(x[0])).sin().powi(2);
    for w in x.windows(2) {
        let yi = y(w[0]) - T::one();
        let s = (pi * y(w[1])).sin();
        core += yi * yi * (T::one() + ten * s * s);
    }
    let yn = y(x[x.len() - 1]) - T::one();
    core += yn * yn;
    let penalties = x
        .iter()
        .map(|&v| penalty(v, ten, T::of(100.0)))
        .fold(T::zero(), |a, b| a + b);
    pi / n * core + penalties
}

/// Penalized function 2, plus `u(x_i, 5, 100, 4)`.
fn penalized_2<T: Real>(x: &[T]) -> T {
    let pi = T::PI();
    let one = T::one();
    let mut core = (T::of(3.0) * pi * x[0]).sin().powi(2);
    for w in x.windows(2) {
        let d = w[0] - one;
        let s = (T::of(3.0) * pi * w[1]).sin();
        core += d * d * (one + s * s);
    }
    let last = x[x.len() - 1];
    let d = last - one;
    let s = (T::of(2.0) * pi * last).sin();
    core += d * d * (one + s * s);
    let penalties = x
        .iter()
        .map(|&v| penalty(v, T::of(5.0), T::of(100.0)))
        .fold(T::zero(), |a, b| a + b);
    T::of(0.1) * core + penalties
}

/// 2 x 25 well centers of Shekel's Foxholes.
const FOXHOLES_A: [[f64; 25]; 2] = [
    [
        -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0,
        32.0, -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0, 32.0,
    ],
    [
        -32.0, -32.0, -32.0, -32.0, -32.0, -16.0, -16.0, -16.0, -16.0, -16.0, 0.0, 0.0, 0.0, 0.0,
        0.0, 16.0, 16.0, 16.0, 16.0, 16.0, 32.0, 32.0, 32.0, 32.0, 32.0,
    ],
];

fn foxholes<T: Real>(x: &[T]) -> T {
    let mut total = T::one() / T::of(500.0);
    for (j, (&a0, &a1)) in FOXHOLES_A[0].iter().zip(&FOXHOLES_A[1]).enumerate() {
        let d0 = x[0] - T::of(a0);
        let d1 = x[1] - T::of(a1);
        total += T::one() / (T::of((j + 1) as f64) + d0.powi(6) + d1.powi(6));
    }
    total.recip()
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
/// Reciprocals of the Kowalik `b_i` values.
const KOWALIK_B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

/// The rational residuals have poles inside the box wherever
/// `b^2 + b*x3 + x4 = 0` (the probe-line grid hits some exactly, e.g.
/// (4, 4, -5, 4) for b = 1 and b = 4). The value there is capped at the
/// worst representable magnitude whose fitness differences still combine
/// finitely, keeping every run total.
fn kowalik<T: Real>(x: &[T]) -> T {
    let cap = T::max_value().sqrt();
    let mut total = T::zero();
    for (&a, &b_inv) in KOWALIK_A.iter().zip(&KOWALIK_B_INV) {
        let b = T::one() / T::of(b_inv);
        let r = T::of(a) - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        total += r * r;
    }
    if total.is_finite() && total <= cap {
        total
    } else {
        cap
    }
}

fn six_hump_camel<T: Real>(x: &[T]) -> T {
    let (x1, x2) = (x[0], x[1]);
    T::of(4.0) * x1 * x1 - T::of(2.1) * x1.powi(4) + x1.powi(6) / T::of(3.0) + x1 * x2
        - T::of(4.0) * x2 * x2
        + T::of(4.0) * x2.powi(4)
}

fn branin<T: Real>(x: &[T]) -> T {
    let (x1, x2) = (x[0], x[1]);
    let pi = T::PI();
    let a = x2 - T::of(5.1) / (T::of(4.0) * pi * pi) * x1 * x1 + T::of(5.0) / pi * x1 - T::of(6.0);
    let b = T::of(10.0) * (T::one() - T::one() / (T::of(8.0) * pi)) * x1.cos();
    a * a + b + T::of(10.0)
}

fn goldstein_price<T: Real>(x: &[T]) -> T {
    let (x1, x2) = (x[0], x[1]);
    let one = T::one();
    let s = x1 + x2 + one;
    let p = T::of(19.0) - T::of(14.0) * x1 + T::of(3.0) * x1 * x1 - T::of(14.0) * x2
        + T::of(6.0) * x1 * x2
        + T::of(3.0) * x2 * x2;
    let t = T::of(2.0) * x1 - T::of(3.0) * x2;
    let q = T::of(18.0) - T::of(32.0) * x1
        + T::of(12.0) * x1 * x1
        + T::of(48.0) * x2
        - T::of(36.0) * x1 * x2
        + T::of(27.0) * x2 * x2;
    (one + s * s * p) * (T::of(30.0) + t * t * q)
}

const HARTMAN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

const HARTMAN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMAN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
];

const HARTMAN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMAN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartman<T: Real, const D: usize>(x: &[T], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> T {
    let mut total = T::zero();
    for i in 0..4 {
        let mut inner = T::zero();
        for j in 0..D {
            let d = x[j] - T::of(p[i][j]);
            inner += T::of(a[i][j]) * d * d;
        }
        total += T::of(HARTMAN_C[i]) * (-inner).exp();
    }
    -total
}

const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

fn shekel<T: Real>(x: &[T], m: usize) -> T {
    let mut total = T::zero();
    for i in 0..m {
        let mut dist = T::zero();
        for j in 0..4 {
            let d = x[j] - T::of(SHEKEL_A[i][j]);
            dist += d * d;
        }
        total += (dist + T::of(SHEKEL_C[i])).recip();
    }
    -total
}
