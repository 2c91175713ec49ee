//! The decision space: an axis-aligned box of feasible solutions that can be
//! shrunk around a promising point and reset to its pristine bounds.

use crate::scalar::Real;

/// Invalid box bounds.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("decision space must have at least one dimension")]
    Empty,
    #[error("lower/upper bound vectors differ in length ({lower} vs {upper})")]
    LengthMismatch { lower: usize, upper: usize },
    #[error("bounds for dimension {0} are not ordered (lower > upper)")]
    Unordered(usize),
    #[error("bound for dimension {0} is not finite")]
    NonFinite(usize),
}

/// Axis-aligned search box. `lower`/`upper` are the current (possibly
/// shrunken) bounds; the initial bounds are kept for `reset` and fix the
/// diagonal length used to sanity-check repositioning displacements.
#[derive(Clone, Debug, PartialEq)]
pub struct DecisionSpace<T> {
    lower: Vec<T>,
    upper: Vec<T>,
    initial_lower: Vec<T>,
    initial_upper: Vec<T>,
    diag_length: T,
}

impl<T: Real> DecisionSpace<T> {
    pub fn new(lower: Vec<T>, upper: Vec<T>) -> Result<Self, SpaceError> {
        if lower.is_empty() {
            return Err(SpaceError::Empty);
        }
        if lower.len() != upper.len() {
            return Err(SpaceError::LengthMismatch {
                lower: lower.len(),
                upper: upper.len(),
            });
        }
        let mut diag_sq = T::zero();
        for (i, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(SpaceError::NonFinite(i));
            }
            if lo > hi {
                return Err(SpaceError::Unordered(i));
            }
            diag_sq += (hi - lo) * (hi - lo);
        }
        Ok(Self {
            initial_lower: lower.clone(),
            initial_upper: upper.clone(),
            lower,
            upper,
            diag_length: diag_sq.sqrt(),
        })
    }

    /// Box with the same bounds in every dimension.
    pub fn uniform(dims: usize, lower: T, upper: T) -> Result<Self, SpaceError> {
        Self::new(vec![lower; dims], vec![upper; dims])
    }

    pub fn dims(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    pub fn initial_lower(&self) -> &[T] {
        &self.initial_lower
    }

    pub fn initial_upper(&self) -> &[T] {
        &self.initial_upper
    }

    /// Euclidean length of the initial-bounds diagonal.
    pub fn diag_length(&self) -> T {
        self.diag_length
    }

    /// True when every coordinate lies within the current bounds (inclusive).
    pub fn contains(&self, point: &[T]) -> bool {
        debug_assert_eq!(point.len(), self.dims());
        point
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(&x, (&lo, &hi))| x >= lo && x <= hi)
    }

    /// Moves each bound a fraction `factor` of its distance to `best`
    /// inward. With `factor` = 0.5 both gaps are halved. If a historical
    /// `best` coordinate sits outside the current interval and the shrunken
    /// bounds would cross, the interval collapses onto `best` clamped into
    /// the pre-shrink interval.
    pub fn shrink_around(&mut self, best: &[T], factor: T) {
        debug_assert_eq!(best.len(), self.dims());
        for i in 0..self.lower.len() {
            let (lo, hi) = (self.lower[i], self.upper[i]);
            let b = best[i];
            let mut new_lo = lo + factor * (b - lo);
            let mut new_hi = hi - factor * (hi - b);
            if new_lo > new_hi {
                let pinned = if b < lo {
                    lo
                } else if b > hi {
                    hi
                } else {
                    b
                };
                new_lo = pinned;
                new_hi = pinned;
            }
            self.lower[i] = new_lo;
            self.upper[i] = new_hi;
        }
    }

    /// Restores the pristine bounds.
    pub fn reset(&mut self) {
        self.lower.copy_from_slice(&self.initial_lower);
        self.upper.copy_from_slice(&self.initial_upper);
    }
}
