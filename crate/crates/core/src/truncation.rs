//! Stopping rules for the infinite series used throughout the crate.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// How an infinite series is cut off and when it counts as converged.
///
/// A series is declared converged once `tail_window` consecutive terms have magnitude
/// below `abs_tol`. Evaluation never uses more than `max_terms` terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruncationPolicy {
    max_terms: usize,
    abs_tol: f64,
    tail_window: usize,
}

impl TruncationPolicy {
    pub fn new(max_terms: usize, abs_tol: f64, tail_window: usize) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::domain("max_terms must be at least 1"));
        }
        if tail_window == 0 {
            return Err(Error::domain("tail_window must be at least 1"));
        }
        if !(abs_tol >= 0.0) || !abs_tol.is_finite() {
            return Err(Error::domain("abs_tol must be a finite nonnegative number"));
        }
        Ok(Self {
            max_terms,
            abs_tol,
            tail_window,
        })
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn tail_window(&self) -> usize {
        self.tail_window
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms.max(1);
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol.max(0.0);
        self
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            max_terms: 200,
            abs_tol: 1e-14,
            tail_window: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// `tail_window` consecutive terms fell below `abs_tol`.
    TailWindow,
    /// The series is a finite sum and every term was included.
    Exact,
    /// `max_terms` reached without meeting the tail criterion.
    MaxTerms,
    /// The next term's rounding bound exceeded `abs_tol`; adding it would only add noise.
    NoiseFloor,
    /// Ran out of input samples before the tail criterion was met.
    SamplesExhausted,
}

/// A truncated series value together with its convergence diagnostics.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesOutcome<T> {
    pub value: T,
    pub terms_used: usize,
    pub tail_estimate: f64,
    pub stop: StopReason,
}

impl<T> SeriesOutcome<T> {
    pub fn converged(&self) -> bool {
        matches!(self.stop, StopReason::TailWindow | StopReason::Exact)
    }

    /// The value, or [`Error::NotConverged`] when the tail criterion was not met.
    pub fn require_converged(self) -> Result<T> {
        if self.converged() {
            Ok(self.value)
        } else {
            Err(Error::NotConverged {
                terms: self.terms_used,
                tail_estimate: self.tail_estimate,
            })
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SeriesOutcome<U> {
        SeriesOutcome {
            value: f(self.value),
            terms_used: self.terms_used,
            tail_estimate: self.tail_estimate,
            stop: self.stop,
        }
    }
}

/// Values that can be summed as series terms.
pub trait SeriesValue: Clone {
    fn scaled(&self, c: Complex64) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn magnitude(&self) -> f64;
}

impl SeriesValue for Complex64 {
    fn scaled(&self, c: Complex64) -> Self {
        self * c
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl SeriesValue for Vec<Complex64> {
    fn scaled(&self, c: Complex64) -> Self {
        self.iter().map(|v| v * c).collect()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (a, b) in self.iter_mut().zip(other) {
            *a += b;
        }
    }
    /// Sup norm.
    fn magnitude(&self) -> f64 {
        self.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Pairwise (cascade) summation with `O(log n)` live partial sums.
#[derive(Debug, Clone)]
pub struct PairwiseSum<T> {
    stack: Vec<(u32, T)>,
}

impl<T: SeriesValue> Default for PairwiseSum<T> {
    fn default() -> Self {
        Self { stack: Vec::new() }
    }
}

impl<T: SeriesValue> PairwiseSum<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, term: T) {
        let mut level = 0u32;
        let mut acc = term;
        while let Some((top_level, _)) = self.stack.last() {
            if *top_level != level {
                break;
            }
            let (_, mut top) = self.stack.pop().expect("nonempty");
            top.add_assign_ref(&acc);
            acc = top;
            level += 1;
        }
        self.stack.push((level, acc));
    }

    /// Total of everything pushed so far, or `None` if nothing was pushed.
    pub fn total(&self) -> Option<T> {
        let mut iter = self.stack.iter().rev();
        let (_, first) = iter.next()?;
        let mut acc = first.clone();
        for (_, v) in iter {
            acc.add_assign_ref(v);
        }
        Some(acc)
    }
}

/// Tracks the last `tail_window` term magnitudes.
#[derive(Debug, Clone)]
pub(crate) struct TailTracker {
    window: usize,
    tol: f64,
    recent: std::collections::VecDeque<f64>,
    small_run: usize,
}

impl TailTracker {
    pub(crate) fn new(policy: &TruncationPolicy) -> Self {
        Self {
            window: policy.tail_window,
            tol: policy.abs_tol,
            recent: std::collections::VecDeque::with_capacity(policy.tail_window + 1),
            small_run: 0,
        }
    }

    /// Records a term magnitude; returns true once the tail criterion holds.
    pub(crate) fn record(&mut self, magnitude: f64) -> bool {
        if self.recent.len() == self.window {
            self.recent.pop_front();
        }
        self.recent.push_back(magnitude);
        if magnitude < self.tol {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        self.small_run >= self.window
    }

    pub(crate) fn estimate(&self) -> f64 {
        self.recent.iter().copied().fold(0.0, f64::max)
    }
}
