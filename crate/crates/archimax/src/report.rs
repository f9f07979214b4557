//! Evaluation grids and structured check reports.
//!
//! Every verification routine in this crate returns a [`CheckReport`]: a
//! verdict, the grid (or sampling range) it swept, the tolerance it applied,
//! and — whenever the verdict is `Fail` — a [`Witness`] pinpointing the first
//! offending evaluation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spacing rule for grid points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    Linear,
    Log,
}

/// A one-dimensional evaluation grid with `count >= 2` points from `lo` to
/// `hi` inclusive. Log grids require `lo > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl Grid {
    pub fn new(lo: f64, hi: f64, count: usize, spacing: Spacing) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Grid(format!("bounds must be finite, got [{lo}, {hi}]")));
        }
        if lo >= hi {
            return Err(Error::Grid(format!("need lo < hi, got [{lo}, {hi}]")));
        }
        if count < 2 {
            return Err(Error::Grid(format!("need at least 2 points, got {count}")));
        }
        if spacing == Spacing::Log && lo <= 0.0 {
            return Err(Error::Grid(format!("log spacing requires lo > 0, got {lo}")));
        }
        Ok(Grid { lo, hi, count, spacing })
    }

    pub fn linear(lo: f64, hi: f64, count: usize) -> Result<Self> {
        Self::new(lo, hi, count, Spacing::Linear)
    }

    pub fn log(lo: f64, hi: f64, count: usize) -> Result<Self> {
        Self::new(lo, hi, count, Spacing::Log)
    }

    /// Materialize the grid points, endpoints exact.
    pub fn points(&self) -> Vec<f64> {
        let m = self.count - 1;
        let mut pts = Vec::with_capacity(self.count);
        for i in 0..=m {
            let f = i as f64 / m as f64;
            let x = match self.spacing {
                Spacing::Linear => self.lo + f * (self.hi - self.lo),
                Spacing::Log => self.lo * (self.hi / self.lo).powf(f),
            };
            pts.push(x);
        }
        pts[0] = self.lo;
        pts[m] = self.hi;
        pts
    }
}

/// Outcome of a verification sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check could not decide: a hypothesis failed, a ratio degenerated,
    /// or the instance is outside the check's validity range.
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// First offending evaluation of a failed (or undecidable) check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Location of the violation (grid point(s), sampled vector, ...).
    pub point: Vec<f64>,
    /// The values that violate the property, in the order named by `detail`.
    pub values: Vec<f64>,
    /// Human-readable statement of what failed.
    pub detail: String,
}

impl Witness {
    pub fn new(point: Vec<f64>, values: Vec<f64>, detail: impl Into<String>) -> Self {
        Witness { point, values, detail: detail.into() }
    }
}

/// Structured result of a verification routine.
///
/// Invariant: `verdict == Fail` implies `witness.is_some()` (enforced by the
/// constructors).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Grid swept by the check. Randomized checks record their sampling range
    /// here, with `count` holding the number of trials.
    pub grid: Grid,
    pub tolerance: f64,
    pub notes: String,
}

impl CheckReport {
    pub fn pass(grid: Grid, tolerance: f64, notes: impl Into<String>) -> Self {
        CheckReport { verdict: Verdict::Pass, witness: None, grid, tolerance, notes: notes.into() }
    }

    pub fn fail(grid: Grid, tolerance: f64, witness: Witness, notes: impl Into<String>) -> Self {
        CheckReport {
            verdict: Verdict::Fail,
            witness: Some(witness),
            grid,
            tolerance,
            notes: notes.into(),
        }
    }

    pub fn inconclusive(
        grid: Grid,
        tolerance: f64,
        witness: Option<Witness>,
        notes: impl Into<String>,
    ) -> Self {
        CheckReport { verdict: Verdict::Inconclusive, witness, grid, tolerance, notes: notes.into() }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Direction of a monotonicity requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Direction {
    NonIncreasing,
    NonDecreasing,
}

/// First adjacent-pair violation of monotonicity over `(xs[i], vals[i])`,
/// allowing slack `tol * (1 + |previous value|)` per comparison.
pub(crate) fn first_monotonicity_violation(
    xs: &[f64],
    vals: &[f64],
    direction: Direction,
    tol: f64,
) -> Option<Witness> {
    for i in 1..vals.len() {
        let (prev, cur) = (vals[i - 1], vals[i]);
        let slack = tol * (1.0 + prev.abs());
        let violated = match direction {
            Direction::NonIncreasing => cur > prev + slack,
            Direction::NonDecreasing => cur < prev - slack,
        };
        if violated {
            let dir = match direction {
                Direction::NonIncreasing => "non-increasing",
                Direction::NonDecreasing => "non-decreasing",
            };
            return Some(Witness::new(
                vec![xs[i - 1], xs[i]],
                vec![prev, cur],
                format!("{dir} violated: value moves from {prev} to {cur}"),
            ));
        }
    }
    None
}
