//! Errant-probe retrieval: the coordinate-wise repositioning-factor scheme,
//! the directional scheme that truncates the trajectory at the box boundary,
//! and the mixed schedule alternating between the two. Also owns the cycling
//! repositioning factor `F_rep`.

use crate::kernel::RunState;
use crate::scalar::Real;
use crate::space::DecisionSpace;
use std::fmt;
use std::str::FromStr;

/// Which retrieval scheme applies at a given step.
///
/// * `CoordinateOnly` — every step uses the per-coordinate factor scheme.
/// * `DirectionalEveryStep` — every step uses the directional scheme.
/// * `Mixed(k)` — directional on steps divisible by `k`, factor scheme
///   otherwise (`Mixed(2)` alternates).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    CoordinateOnly,
    DirectionalEveryStep,
    Mixed(usize),
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::CoordinateOnly => write!(f, "none"),
            Scheme::DirectionalEveryStep => write!(f, "every"),
            Scheme::Mixed(k) => write!(f, "mixed:{k}"),
        }
    }
}

/// Unknown scheme token.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("unknown scheme {0:?} (expected \"none\", \"every\" or \"mixed:<k>\" with k >= 2)")]
pub struct ParseSchemeError(pub String);

impl FromStr for Scheme {
    type Err = ParseSchemeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Scheme::CoordinateOnly),
            "every" => Ok(Scheme::DirectionalEveryStep),
            "mixed" => Ok(Scheme::Mixed(2)),
            _ => {
                let k = s
                    .strip_prefix("mixed:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| ParseSchemeError(s.to_string()))?;
                if k >= 2 {
                    Ok(Scheme::Mixed(k))
                } else {
                    Err(ParseSchemeError(s.to_string()))
                }
            }
        }
    }
}

/// How boundary-plane intersections at (numerically) zero displacement are
/// treated when computing the exit parameter.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EtaRule {
    /// Only strictly positive intersection parameters are candidates; axes
    /// without displacement contribute none.
    #[default]
    StrictPositive,
    /// Archaeology mode reproducing the original source: axes without
    /// displacement contribute a zero candidate and the minimum is taken
    /// over parameters `>= 0`, so a probe starting on a face is sent back
    /// to its previous position.
    ZeroCompat,
}

/// Invalid policy configuration.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolicyError {
    #[error("mixed scheme interval must be >= 1, got 0")]
    ZeroInterval,
    #[error("repositioning factor bounds must satisfy 0 < frep_min <= 1")]
    BadFrepMin,
    #[error("frep_delta must be positive and finite")]
    BadFrepDelta,
}

/// Retrieval scheme plus the cycling repositioning-factor state. The stored
/// `frep` always lies in `[frep_min, 1]`: each advance increments by
/// `frep_delta` and wraps to `frep_min` as soon as the value passes 1.
#[derive(Clone, Debug, PartialEq)]
pub struct RepositionPolicy<T> {
    pub scheme: Scheme,
    pub frep: T,
    pub frep_init: T,
    pub frep_delta: T,
    pub frep_min: T,
    pub eta_rule: EtaRule,
}

impl<T: Real> RepositionPolicy<T> {
    /// Policy with the reference constants: `frep` starting at 0.5,
    /// increment 0.1, wrap-around floor 0.05.
    pub fn new(scheme: Scheme) -> Self {
        Self {
            scheme,
            frep: T::of(0.5),
            frep_init: T::of(0.5),
            frep_delta: T::of(0.1),
            frep_min: T::of(0.05),
            eta_rule: EtaRule::default(),
        }
    }

    pub fn with_eta_rule(mut self, rule: EtaRule) -> Self {
        self.eta_rule = rule;
        self
    }

    pub fn validate(&self) -> Result<(), PolicyError> {
        if let Scheme::Mixed(0) = self.scheme {
            return Err(PolicyError::ZeroInterval);
        }
        if !(self.frep_min > T::zero() && self.frep_min <= T::one()) {
            return Err(PolicyError::BadFrepMin);
        }
        if !(self.frep_delta > T::zero()) || !self.frep_delta.is_finite() {
            return Err(PolicyError::BadFrepDelta);
        }
        Ok(())
    }

    /// Increment `frep` by `frep_delta`, wrapping to `frep_min` once the
    /// value exceeds 1.
    pub fn advance_frep(&mut self) {
        self.frep = self.frep + self.frep_delta;
        if self.frep > T::one() {
            self.frep = self.frep_min;
        }
    }
}

/// Where a probe's segment leaves the box: the smallest admissible line
/// parameter and the corresponding displacement from the starting point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryExit<T> {
    pub eta_star: T,
    pub d_max: T,
}

/// The probe's segment never crosses the boundary with an admissible
/// parameter (e.g. it starts on the face it exits through). Callers fall
/// back to the coordinate-wise scheme.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("no admissible boundary intersection along the probe segment")]
pub struct DegenerateExit;

/// Coordinate-wise retrieval: an out-of-bounds coordinate is placed a
/// fraction `frep` of its previous distance from the violated bound back
/// inside, clamped to the bound itself. In-bounds coordinates are untouched.
pub fn clamp_coordinatewise<T: Real>(
    prev: &[T],
    cur: &mut [T],
    space: &DecisionSpace<T>,
    frep: T,
) {
    let (lower, upper) = (space.lower(), space.upper());
    for i in 0..cur.len() {
        if cur[i] < lower[i] {
            cur[i] = (lower[i] + frep * (prev[i] - lower[i])).max(lower[i]);
        }
        if cur[i] > upper[i] {
            cur[i] = (upper[i] - frep * (upper[i] - prev[i])).min(upper[i]);
        }
        // After a shrink the previous position itself can sit below the
        // bound, in which case the second clause may undershoot; pin it.
        if cur[i] < lower[i] {
            cur[i] = lower[i];
        }
    }
}

/// Intersection of the segment `from -> to` with the box boundary: for each
/// dimension and each bounding plane, the line parameter is
/// `(bound - from_i) / (to_i - from_i)`; the exit parameter is the smallest
/// admissible one and `d_max = eta_star * |to - from|`. Axes whose
/// displacement does not exceed `eps` contribute no candidates.
///
/// With [`EtaRule::StrictPositive`], a successful result guarantees
/// `0 < eta_star <= 1`; anything else reports a degenerate exit.
pub fn line_box_exit<T: Real>(
    space: &DecisionSpace<T>,
    from: &[T],
    to: &[T],
    eps: T,
) -> Result<BoundaryExit<T>, DegenerateExit> {
    line_box_exit_with(space, from, to, eps, EtaRule::StrictPositive)
}

/// [`line_box_exit`] with an explicit zero-displacement rule.
pub fn line_box_exit_with<T: Real>(
    space: &DecisionSpace<T>,
    from: &[T],
    to: &[T],
    eps: T,
    rule: EtaRule,
) -> Result<BoundaryExit<T>, DegenerateExit> {
    debug_assert_eq!(from.len(), space.dims());
    debug_assert_eq!(to.len(), space.dims());
    let (lower, upper) = (space.lower(), space.upper());
    let mut eta_star: Option<T> = None;
    let mut consider = |eta: T| {
        let admissible = match rule {
            EtaRule::StrictPositive => eta > T::zero(),
            EtaRule::ZeroCompat => eta >= T::zero(),
        };
        if admissible && eta_star.map_or(true, |b| eta < b) {
            eta_star = Some(eta);
        }
    };
    for i in 0..from.len() {
        let d = to[i] - from[i];
        if d.abs() <= eps {
            if rule == EtaRule::ZeroCompat {
                consider(T::zero());
            }
            continue;
        }
        consider((lower[i] - from[i]) / d);
        consider((upper[i] - from[i]) / d);
    }
    let eta_star = eta_star.ok_or(DegenerateExit)?;
    if rule == EtaRule::StrictPositive && eta_star > T::one() {
        // The segment only reaches a plane past its endpoint: the probe
        // started on the face it left through.
        return Err(DegenerateExit);
    }
    let mut dist_sq = T::zero();
    for i in 0..from.len() {
        let d = to[i] - from[i];
        dist_sq += d * d;
    }
    Ok(BoundaryExit {
        eta_star,
        d_max: eta_star * dist_sq.sqrt(),
    })
}

fn pin_to_bounds<T: Real>(cur: &mut [T], space: &DecisionSpace<T>) {
    let (lower, upper) = (space.lower(), space.upper());
    for i in 0..cur.len() {
        if cur[i] < lower[i] {
            cur[i] = lower[i];
        } else if cur[i] > upper[i] {
            cur[i] = upper[i];
        }
    }
}

/// Directional retrieval: move the probe from its previous (interior)
/// position a distance `frep * d_max` along its acceleration direction,
/// which places it inside the box or on the boundary. Degenerate geometry
/// or a vanishing acceleration falls back to the coordinate-wise scheme.
/// The result is pinned onto the boundary against round-off.
pub fn reposition_directional<T: Real>(
    prev: &[T],
    cur: &mut [T],
    accel: &[T],
    space: &DecisionSpace<T>,
    frep: T,
    eps: T,
    rule: EtaRule,
) {
    let mut accel_sq = T::zero();
    for &a in accel {
        accel_sq += a * a;
    }
    let accel_norm = accel_sq.sqrt();
    if accel_norm <= eps || !accel_norm.is_finite() {
        clamp_coordinatewise(prev, cur, space, frep);
        return;
    }
    if let Ok(exit) = line_box_exit_with(space, prev, cur, eps, rule) {
        let scale = frep * exit.d_max;
        if scale.is_finite() {
            let mut finite = true;
            for i in 0..cur.len() {
                let candidate = prev[i] + scale * accel[i] / accel_norm;
                if !candidate.is_finite() {
                    finite = false;
                    break;
                }
            }
            if finite {
                for i in 0..cur.len() {
                    cur[i] = prev[i] + scale * accel[i] / accel_norm;
                }
                pin_to_bounds(cur, space);
                return;
            }
        }
    }
    clamp_coordinatewise(prev, cur, space, frep);
}

/// Retrieves every errant probe at step `j`, mutating the step-`j` (and for
/// the both-steps-outside case the step-`j-1`) position rows. The branch
/// taken by the directional logic per probe:
///
/// * inside the box at `j` — untouched;
/// * outside at `j`, inside at `j-1` — directional retrieval along the
///   step-`j-1` acceleration;
/// * outside at both (possible only after a shrink) — coordinate-wise
///   retrieval of the `j-1` row against the `j-2` row, then of the `j` row
///   against the corrected `j-1` row. Before step 2 the `j-1` row is pinned
///   straight onto the violated bounds instead.
pub fn retrieve_errant<T: Real>(
    state: &mut RunState<T>,
    j: usize,
    space: &DecisionSpace<T>,
    policy: &RepositionPolicy<T>,
    eps: T,
) {
    let directional = match policy.scheme {
        Scheme::CoordinateOnly => false,
        Scheme::DirectionalEveryStep => true,
        Scheme::Mixed(k) => j % k == 0,
    };
    let dims = state.dims();
    let num_probes = state.num_probes();
    let frep = policy.frep;
    let (row_jm2, row_jm1, row_j, accel_jm1) = state.retrieval_views(j);

    for p in 0..num_probes {
        let span = p * dims..(p + 1) * dims;
        let cur = &mut row_j[span.clone()];
        if !directional {
            clamp_coordinatewise(&row_jm1[span.clone()], cur, space, frep);
            continue;
        }
        if space.contains(cur) {
            continue;
        }
        let prev = &mut row_jm1[span.clone()];
        if space.contains(prev) {
            reposition_directional(
                prev,
                cur,
                &accel_jm1[span.clone()],
                space,
                frep,
                eps,
                policy.eta_rule,
            );
        } else {
            match row_jm2 {
                Some(jm2) => clamp_coordinatewise(&jm2[span.clone()], prev, space, frep),
                None => pin_to_bounds(prev, space),
            }
            clamp_coordinatewise(prev, cur, space, frep);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn unit_square() -> DecisionSpace<f64> {
        DecisionSpace::uniform(2, 0.0, 1.0).unwrap()
    }

    const EPS: f64 = 1e-10;

    #[test]
    fn scheme_tokens() {
        assert_eq!("none".parse::<Scheme>().unwrap(), Scheme::CoordinateOnly);
        assert_eq!(
            "every".parse::<Scheme>().unwrap(),
            Scheme::DirectionalEveryStep
        );
        assert_eq!("mixed:2".parse::<Scheme>().unwrap(), Scheme::Mixed(2));
        assert_eq!("mixed".parse::<Scheme>().unwrap(), Scheme::Mixed(2));
        assert_eq!("mixed:7".parse::<Scheme>().unwrap(), Scheme::Mixed(7));
        assert!("mixed:1".parse::<Scheme>().is_err());
        assert!("mixed:x".parse::<Scheme>().is_err());
        assert!("sometimes".parse::<Scheme>().is_err());
        for s in [Scheme::CoordinateOnly, Scheme::DirectionalEveryStep, Scheme::Mixed(3)] {
            assert_eq!(s.to_string().parse::<Scheme>().unwrap(), s);
        }
    }

    #[test]
    fn frep_increments_then_wraps() {
        let mut p = RepositionPolicy::<f64>::new(Scheme::CoordinateOnly);
        p.advance_frep();
        assert_eq!(p.frep, 0.6);
        p.frep = 1.0;
        p.advance_frep();
        assert_eq!(p.frep, 0.05); // 1.1 exceeds 1, wraps to the floor
    }

    #[test]
    fn frep_cycle_structure() {
        let mut p = RepositionPolicy::<f64>::new(Scheme::CoordinateOnly);
        let mut values = Vec::new();
        for _ in 0..30 {
            p.advance_frep();
            values.push(p.frep);
        }
        // first wrap on the 6th increment
        assert_eq!(values[5], 0.05);
        // thereafter period 10, bitwise
        for k in 5..20 {
            assert_eq!(values[k].to_bits(), values[k + 10].to_bits());
        }
        for &v in &values {
            assert!((0.05..=1.0).contains(&v));
        }
    }

    #[test]
    fn clamp_examples() {
        let space = DecisionSpace::uniform(1, 0.0, 10.0).unwrap();
        let mut cur = [-2.0];
        clamp_coordinatewise(&[4.0], &mut cur, &space, 0.5);
        assert_eq!(cur[0], 2.0);
        let mut cur = [12.0];
        clamp_coordinatewise(&[9.0], &mut cur, &space, 0.5);
        assert_eq!(cur[0], 9.5);
    }

    #[test]
    fn clamp_leaves_interior_points_bitwise_untouched() {
        let space = unit_square();
        let mut cur = [0.123456789, 0.987654321e-1];
        let orig = cur;
        clamp_coordinatewise(&[0.5, 0.5], &mut cur, &space, 0.7);
        assert_eq!(cur[0].to_bits(), orig[0].to_bits());
        assert_eq!(cur[1].to_bits(), orig[1].to_bits());
    }

    #[test]
    fn clamp_contains_even_with_previous_point_outside() {
        // prev below the box, current above: the formula alone would
        // undershoot the lower bound.
        let space = DecisionSpace::uniform(1, 0.0, 1.0).unwrap();
        let mut cur = [2.0];
        clamp_coordinatewise(&[-0.5], &mut cur, &space, 1.0);
        assert!(space.contains(&cur));
        let mut cur = [-5.0];
        clamp_coordinatewise(&[10.0], &mut cur, &space, 0.5);
        assert!(space.contains(&cur));
    }

    #[test]
    fn exit_straight_through_a_face() {
        let exit = line_box_exit(&unit_square(), &[0.5, 0.5], &[1.5, 0.5], EPS).unwrap();
        assert_eq!(exit.eta_star, 0.5);
        assert_eq!(exit.d_max, 0.5);
    }

    #[test]
    fn exit_through_a_corner_region() {
        let exit = line_box_exit(&unit_square(), &[0.5, 0.5], &[2.5, -1.5], EPS).unwrap();
        assert_eq!(exit.eta_star, 0.25);
        assert_abs_diff_eq!(exit.d_max, 0.25 * 8.0f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn start_on_a_face_crossing_the_box_uses_the_opposite_face() {
        // from on the lower x-face moving through the box and out the other
        // side; the zero candidate from the starting face is excluded.
        let exit = line_box_exit(&unit_square(), &[0.0, 0.5], &[1.5, 0.5], EPS).unwrap();
        assert_abs_diff_eq!(exit.eta_star, 2.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn start_on_a_face_moving_straight_out_is_degenerate() {
        assert_eq!(
            line_box_exit(&unit_square(), &[1.0, 0.5], &[1.5, 0.5], EPS).unwrap_err(),
            DegenerateExit
        );
    }

    #[test]
    fn sideways_exit_from_a_face_is_degenerate_not_overshooting() {
        // Exit plane candidate is eta = 0 (excluded); the other in-motion
        // axis would only cross past the endpoint (eta > 1).
        let r = line_box_exit(&unit_square(), &[1.0, 0.5], &[1.5, 0.6], EPS);
        assert_eq!(r.unwrap_err(), DegenerateExit);
    }

    #[test]
    fn zero_compat_rule_reproduces_the_zero_eta_behavior() {
        let exit =
            line_box_exit_with(&unit_square(), &[1.0, 0.5], &[1.5, 0.5], EPS, EtaRule::ZeroCompat)
                .unwrap();
        assert_eq!(exit.eta_star, 0.0);
        assert_eq!(exit.d_max, 0.0);
        // a zero-motion axis alone forces eta* = 0 in compat mode
        let exit =
            line_box_exit_with(&unit_square(), &[0.5, 0.5], &[1.5, 0.5], EPS, EtaRule::ZeroCompat)
                .unwrap();
        assert_eq!(exit.eta_star, 0.0);
    }

    #[test]
    fn exit_point_lies_on_the_boundary() {
        let space = DecisionSpace::new(vec![-2.0, 1.0, 0.0], vec![3.0, 4.0, 9.0]).unwrap();
        let from = [0.5, 2.0, 5.0];
        let to = [4.0, 5.0, -1.0];
        let exit = line_box_exit(&space, &from, &to, EPS).unwrap();
        let on_bound = (0..3).any(|i| {
            let s = from[i] + exit.eta_star * (to[i] - from[i]);
            (s - space.lower()[i]).abs() <= 1e-9 || (s - space.upper()[i]).abs() <= 1e-9
        });
        assert!(on_bound);
        assert!(exit.d_max <= space.diag_length());
    }

    #[test]
    fn directional_examples() {
        let space = unit_square();
        let prev = [0.5, 0.5];
        let accel = [1.0, 0.0];
        let mut cur = [1.5, 0.5];
        reposition_directional(&prev, &mut cur, &accel, &space, 1.0, EPS, EtaRule::default());
        assert_eq!(cur, [1.0, 0.5]); // exactly on the boundary
        let mut cur = [1.5, 0.5];
        reposition_directional(&prev, &mut cur, &accel, &space, 0.5, EPS, EtaRule::default());
        assert_eq!(cur, [0.75, 0.5]);
    }

    #[test]
    fn directional_shrinks_to_prev_as_frep_vanishes() {
        let space = unit_square();
        let prev = [0.5, 0.5];
        let accel = [1.0, 0.0];
        let mut cur = [1.5, 0.5];
        reposition_directional(&prev, &mut cur, &accel, &space, 1e-12, EPS, EtaRule::default());
        assert_abs_diff_eq!(cur[0], 0.5, epsilon = 1e-11);
        assert_eq!(cur[1], 0.5);
    }

    #[test]
    fn directional_with_overflowing_geometry_falls_back_to_clamp() {
        // A probe thrown astronomically far out (huge but finite fitness
        // differences can do this) must still come back inside.
        let space = unit_square();
        let prev = [0.9, 0.5];
        let mut cur = [1e160, 0.5];
        let accel = [1e160, 0.0]; // norm overflows to infinity when squared
        reposition_directional(&prev, &mut cur, &accel, &space, 0.5, EPS, EtaRule::default());
        assert!(space.contains(&cur), "{cur:?}");
        // infinite coordinates are likewise retrieved
        let mut cur = [f64::INFINITY, 0.5];
        reposition_directional(&prev, &mut cur, &[0.3, 0.0], &space, 0.5, EPS, EtaRule::default());
        assert!(space.contains(&cur), "{cur:?}");
    }

    #[test]
    fn directional_with_vanishing_acceleration_falls_back() {
        let space = unit_square();
        let prev = [0.9, 0.5];
        let mut cur = [1.3, 0.5];
        reposition_directional(&prev, &mut cur, &[0.0, 0.0], &space, 0.5, EPS, EtaRule::default());
        // Eq. (3): min(1 - 0.5*(1 - 0.9), 1) = 0.95
        assert_abs_diff_eq!(cur[0], 0.95, epsilon = 1e-15);
    }

    fn state_with_rows(dims: usize, rows: &[Vec<f64>]) -> RunState<f64> {
        let np = rows[0].len() / dims;
        let mut state = RunState::new(np, dims);
        for row in rows {
            state.push_positions(row);
            state.push_fitness(&vec![0.0; np]);
            state.push_accelerations(&vec![0.0; np * dims]);
        }
        state
    }

    #[test]
    fn probes_inside_are_bitwise_untouched() {
        let space = unit_square();
        let rows = vec![vec![0.25, 0.75, 0.5, 0.5], vec![0.3, 0.7, 0.6, 0.4]];
        for scheme in [
            Scheme::CoordinateOnly,
            Scheme::DirectionalEveryStep,
            Scheme::Mixed(2),
        ] {
            let mut state = state_with_rows(2, &rows);
            let policy = RepositionPolicy::new(scheme);
            retrieve_errant(&mut state, 1, &space, &policy, EPS);
            assert_eq!(state.position_row(1), &rows[1][..]);
        }
    }

    #[test]
    fn coordinate_scheme_touches_only_violating_coordinates() {
        let space = unit_square();
        let rows = vec![vec![0.25, 0.75], vec![0.3, 1.2]];
        let mut state = state_with_rows(2, &rows);
        let policy = RepositionPolicy::new(Scheme::CoordinateOnly);
        retrieve_errant(&mut state, 1, &space, &policy, EPS);
        let row = state.position_row(1);
        assert_eq!(row[0].to_bits(), 0.3f64.to_bits());
        assert_eq!(row[1], 1.0 - 0.5 * (1.0 - 0.75)); // 0.875
    }

    #[test]
    fn directional_branch_moves_along_the_acceleration() {
        let space = unit_square();
        let mut state = RunState::new(1, 2);
        state.push_positions(&[0.5, 0.5]);
        state.push_fitness(&[0.0]);
        state.push_accelerations(&[1.0, 0.0]); // drives the 0 -> 1 move
        state.push_positions(&[1.5, 0.5]);
        let mut policy = RepositionPolicy::new(Scheme::DirectionalEveryStep);
        policy.frep = 1.0;
        retrieve_errant(&mut state, 1, &space, &policy, EPS);
        assert_eq!(state.position_row(1), &[1.0, 0.5]);
    }

    #[test]
    fn both_steps_outside_corrects_both_rows() {
        // Probe outside at steps j-1 and j, as happens after a shrink.
        let big = DecisionSpace::uniform(1, 0.0, 10.0).unwrap();
        let mut small = big.clone();
        small.shrink_around(&[0.0], 0.5); // [0, 5]
        let rows = vec![vec![2.0], vec![8.0], vec![9.0]];
        let mut state = state_with_rows(1, &rows);
        let mut policy = RepositionPolicy::new(Scheme::DirectionalEveryStep);
        policy.frep = 0.5;
        retrieve_errant(&mut state, 2, &small, &policy, EPS);
        // j-1 row: min(5 - 0.5*(5 - 2), 5) = 3.5; j row: min(5 - 0.5*(5 - 3.5), 5) = 4.25
        assert_eq!(state.position_row(1), &[3.5]);
        assert_eq!(state.position_row(2), &[4.25]);
        assert!(small.contains(state.position_row(2)));
    }

    #[test]
    fn both_steps_outside_at_step_one_pins_the_first_row() {
        let space = DecisionSpace::uniform(1, 0.0, 1.0).unwrap();
        let mut tiny = space.clone();
        tiny.shrink_around(&[0.0], 0.5); // [0, 0.5]
        let rows = vec![vec![0.9], vec![1.4]];
        let mut state = state_with_rows(1, &rows);
        let policy = RepositionPolicy::new(Scheme::DirectionalEveryStep);
        retrieve_errant(&mut state, 1, &tiny, &policy, EPS);
        assert_eq!(state.position_row(0), &[0.5]); // pinned to the violated bound
        assert!(tiny.contains(state.position_row(1)));
    }

    #[test]
    fn mixed_interval_selects_the_branch_by_step() {
        let space = unit_square();
        let rows = vec![vec![0.5, 0.5], vec![1.5, 0.5]];
        // On an odd step Mixed(2) must behave exactly like the factor
        // scheme even though the directional data is available.
        let mut mixed = state_with_rows(2, &rows);
        let mut coord = state_with_rows(2, &rows);
        retrieve_errant(
            &mut mixed,
            1,
            &space,
            &RepositionPolicy::new(Scheme::Mixed(2)),
            EPS,
        );
        retrieve_errant(
            &mut coord,
            1,
            &space,
            &RepositionPolicy::new(Scheme::CoordinateOnly),
            EPS,
        );
        assert_eq!(mixed.position_row(1), coord.position_row(1));
    }
}
