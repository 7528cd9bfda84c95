//! Cauchon's deleting-derivations algorithm in both step orders.
//!
//! Starting from a TP matrix `X`, each step picks a pivot `(i,j)` and replaces
//! `x_kl` by `x_kl - x_kj x_ij^{-1} x_il` on the entries strictly above-left of the
//! pivot (reverse lexicographic order, giving the Γ-scaffolding) or strictly
//! below-right of it (column-major order, giving the Ⱡ-scaffolding). Pivot rows and
//! columns are never modified, so every step is invertible while pivots are nonzero.

use std::fmt;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{contiguous_down, index_subsets, Matrix};
use crate::rational::Rational;
use crate::scaffold::Orientation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepOrder {
    /// `(i,j) ≺ (k,l)` iff `i > k`, or `i = k` and `j > l`. Produces the Γ-scaffolding.
    ReverseLex,
    /// `(i,j) ≺₀ (k,l)` iff `j < l`, or `j = l` and `i < k`. Produces the Ⱡ-scaffolding.
    ColMajor,
}

impl StepOrder {
    pub fn for_orientation(orientation: Orientation) -> Self {
        match orientation {
            Orientation::Gamma => StepOrder::ReverseLex,
            Orientation::Le => StepOrder::ColMajor,
        }
    }

    pub fn orientation(self) -> Orientation {
        match self {
            StepOrder::ReverseLex => Orientation::Gamma,
            StepOrder::ColMajor => Orientation::Le,
        }
    }

    /// Zero-based position of `(i,j)` in the step sequence of an `m x n` matrix.
    pub fn rank(self, m: usize, n: usize, (i, j): (usize, usize)) -> usize {
        match self {
            StepOrder::ReverseLex => (m - i) * n + (n - j),
            StepOrder::ColMajor => (j - 1) * m + (i - 1),
        }
    }

    /// `a` comes strictly before `b` in the step sequence.
    pub fn precedes(self, m: usize, n: usize, a: (usize, usize), b: (usize, usize)) -> bool {
        self.rank(m, n, a) < self.rank(m, n, b)
    }

    /// Every position in step order.
    pub fn positions(self, m: usize, n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(m * n);
        match self {
            StepOrder::ReverseLex => {
                for i in (1..=m).rev() {
                    for j in (1..=n).rev() {
                        out.push((i, j));
                    }
                }
            }
            StepOrder::ColMajor => {
                for j in 1..=n {
                    for i in 1..=m {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    /// Whether the step at `pivot` changes anything.
    fn is_effective(self, m: usize, n: usize, (i, j): (usize, usize)) -> bool {
        match self {
            StepOrder::ReverseLex => i >= 2 && j >= 2,
            StepOrder::ColMajor => i < m && j < n,
        }
    }

    fn in_update_region(self, pivot: (usize, usize), (k, l): (usize, usize)) -> bool {
        match self {
            StepOrder::ReverseLex => k < pivot.0 && l < pivot.1,
            StepOrder::ColMajor => k > pivot.0 && l > pivot.1,
        }
    }

    /// Positions `(k,l)` at or after `label` in the step sequence, i.e. those not yet
    /// used as pivots when `X^{label}` is reached.
    fn settled_region(
        self,
        m: usize,
        n: usize,
        label: (usize, usize),
    ) -> impl Fn(usize, usize) -> bool {
        let threshold = self.rank(m, n, label);
        move |k, l| self.rank(m, n, (k, l)) >= threshold
    }
}

/// One recorded matrix `X^{(i,j)}` of a Cauchon run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub position: (usize, usize),
    pub matrix: Matrix,
}

/// The initial matrix followed by the result of every effective step.
///
/// Steps whose update region is empty are not recorded; the matrix after such a step
/// equals the last recorded one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchonTrace {
    order: StepOrder,
    steps: Vec<TraceStep>,
}

impl CauchonTrace {
    pub fn order(&self) -> StepOrder {
        self.order
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The final matrix `T`.
    pub fn output(&self) -> &Matrix {
        &self.steps.last().expect("a trace is never empty").matrix
    }

    /// `X^{position}`, including positions reached through skipped steps.
    pub fn matrix_at(&self, position: (usize, usize)) -> Result<&Matrix> {
        let x = &self.steps[0].matrix;
        let (m, n) = (x.rows(), x.cols());
        if !(1..=m).contains(&position.0) || !(1..=n).contains(&position.1) {
            return Err(Error::IndexOutOfRange {
                index: position.0.max(position.1),
                bound: m.max(n),
            });
        }
        let target = self.order.rank(m, n, position);
        let step = self
            .steps
            .iter()
            .rev()
            .find(|s| self.order.rank(m, n, s.position) <= target)
            .expect("the first step has rank 0");
        Ok(&step.matrix)
    }
}

/// Runs Cauchon's algorithm and records every intermediate matrix.
pub fn cauchon_trace(x: &Matrix, order: StepOrder) -> Result<CauchonTrace> {
    let (m, n) = (x.rows(), x.cols());
    let positions = order.positions(m, n);
    let mut current = x.clone();
    let mut steps = vec![TraceStep {
        position: positions[0],
        matrix: current.clone(),
    }];
    for w in positions.windows(2) {
        let (pivot, next) = (w[0], w[1]);
        if !order.is_effective(m, n, pivot) {
            continue;
        }
        let p = current.get(pivot.0, pivot.1).clone();
        if p.is_zero() {
            return Err(Error::ZeroPivot {
                row: pivot.0,
                col: pivot.1,
            });
        }
        let mut updated = current.clone();
        for k in 1..=m {
            for l in 1..=n {
                if order.in_update_region(pivot, (k, l)) {
                    let delta = current.get(k, pivot.1) * current.get(pivot.0, l) / &p;
                    updated.set(k, l, current.get(k, l) - delta);
                }
            }
        }
        current = updated;
        steps.push(TraceStep {
            position: next,
            matrix: current.clone(),
        });
    }
    Ok(CauchonTrace { order, steps })
}

/// Scaffolding of `x` in the given orientation.
///
/// Fails with [`Error::ZeroPivot`] or [`Error::NonPositiveScaffold`] when `x` is not TP.
/// A positive result alone does not certify total positivity; see
/// [`crate::positivity`] for the full check.
pub fn scaffold(x: &Matrix, orientation: Orientation) -> Result<Matrix> {
    let trace = cauchon_trace(x, StepOrder::for_orientation(orientation))?;
    let t = trace.output().clone();
    if let Some((row, col)) = t.first_non_positive() {
        return Err(Error::NonPositiveScaffold { row, col });
    }
    Ok(t)
}

/// Γ-scaffolding: the positive `T` with `X(T) = x` in the Γ graph.
pub fn gamma_scaffold(x: &Matrix) -> Result<Matrix> {
    scaffold(x, Orientation::Gamma)
}

/// Ⱡ-scaffolding: the positive `T` with `X(T) = x` in the Ⱡ graph.
pub fn le_scaffold(x: &Matrix) -> Result<Matrix> {
    scaffold(x, Orientation::Le)
}

/// `t_ij = det X[{i⋯},{j⋯}] / det X[{i+1⋯},{j+1⋯}]`, the empty minor being 1.
pub fn scaffold_entry_formula(x: &Matrix, i: usize, j: usize) -> Result<Rational> {
    let (m, n) = (x.rows(), x.cols());
    if !(1..=m).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, bound: m });
    }
    if !(1..=n).contains(&j) {
        return Err(Error::IndexOutOfRange { index: j, bound: n });
    }
    let (nr, nc) = contiguous_down(m, n, i, j);
    let (dr, dc) = contiguous_down(m, n, i + 1, j + 1);
    let den = x.minor_at(&dr, &dc);
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x.minor_at(&nr, &nc) / den)
}

/// Largest `min(m, n)` for which [`partial_tp_check`] enumerates minors.
pub const PARTIAL_MINOR_LIMIT: usize = 5;

/// First failure found by [`partial_tp_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartialTpViolation {
    NonPositiveEntry {
        label: (usize, usize),
        entry: (usize, usize),
        value: Rational,
    },
    NonPositiveMinor {
        label: (usize, usize),
        rows: Vec<usize>,
        cols: Vec<usize>,
        value: Rational,
    },
}

impl fmt::Display for PartialTpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartialTpViolation::NonPositiveEntry {
                label,
                entry,
                value,
            } => write!(f, "X^{label:?} has entry {entry:?} = {value}"),
            PartialTpViolation::NonPositiveMinor {
                label,
                rows,
                cols,
                value,
            } => write!(f, "X^{label:?} has minor {rows:?}x{cols:?} = {value}"),
        }
    }
}

/// Checks every recorded intermediate: all entries positive, and (for
/// `min(m,n) <= PARTIAL_MINOR_LIMIT`) every minor supported on positions that have not
/// yet served as pivots is positive.
pub fn partial_tp_check(trace: &CauchonTrace) -> std::result::Result<(), Box<PartialTpViolation>> {
    for step in trace.steps() {
        let x = &step.matrix;
        if let Some(entry) = x.first_non_positive() {
            return Err(Box::new(PartialTpViolation::NonPositiveEntry {
                label: step.position,
                entry,
                value: x.get(entry.0, entry.1).clone(),
            }));
        }
    }
    let Some(first) = trace.steps().first() else {
        return Ok(());
    };
    let (m, n) = (first.matrix.rows(), first.matrix.cols());
    if m.min(n) > PARTIAL_MINOR_LIMIT {
        return Ok(());
    }
    for step in trace.steps() {
        let x = &step.matrix;
        let settled = trace.order().settled_region(m, n, step.position);
        for k in 2..=m.min(n) {
            for rows in index_subsets(m, k) {
                for cols in index_subsets(n, k) {
                    let supported = rows.iter().all(|&r| cols.iter().all(|&c| settled(r, c)));
                    if !supported {
                        continue;
                    }
                    let value = x.minor_at(&rows, &cols);
                    if !value.is_positive() {
                        return Err(Box::new(PartialTpViolation::NonPositiveMinor {
                            label: step.position,
                            rows,
                            cols,
                            value,
                        }));
                    }
                }
            }
        }
    }
    Ok(())
}
