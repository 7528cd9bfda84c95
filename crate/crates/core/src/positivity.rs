//! Total-positivity verdicts.
//!
//! The exhaustive check evaluates every minor. The fast check runs the Γ-ordered
//! Cauchon algorithm: when no pivot vanishes each step can be undone (pivot rows and
//! columns are left untouched), so a strictly positive output `T` together with the
//! exact reconstruction `X(T) = A` certifies `A = X(T)`, and path matrices of positive
//! weights are TP. The reconstruction is checked rather than assumed.

use std::fmt;

use num::Signed;

use crate::cauchon::cauchon_trace;
use crate::cauchon::StepOrder;
use crate::error::{Error, Result};
use crate::matrix::{index_subsets, IndexSet, Matrix};
use crate::rational::Rational;
use crate::scaffold::{Orientation, ScaffoldGraph};

/// Exhaustive checks refuse `min(m, n)` above this unless forced.
pub const EXHAUSTIVE_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TpMode {
    Exhaustive { force: bool },
    Fast,
}

impl Default for TpMode {
    fn default() -> Self {
        TpMode::Exhaustive { force: false }
    }
}

/// Why a matrix failed the check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Minor {
        rows: IndexSet,
        cols: IndexSet,
        value: Rational,
    },
    ZeroPivot {
        row: usize,
        col: usize,
    },
    NonPositiveScaffold {
        row: usize,
        col: usize,
    },
    ReconstructionMismatch,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Minor { rows, cols, value } => {
                write!(f, "minor rows {rows} cols {cols} = {value}")
            }
            Witness::ZeroPivot { row, col } => write!(f, "zero pivot at ({row},{col})"),
            Witness::NonPositiveScaffold { row, col } => {
                write!(f, "non-positive scaffolding entry at ({row},{col})")
            }
            Witness::ReconstructionMismatch => {
                f.write_str("scaffolding does not reconstruct the input")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TpVerdict {
    TotallyPositive,
    NotTotallyPositive(Witness),
}

impl TpVerdict {
    pub fn is_tp(&self) -> bool {
        matches!(self, TpVerdict::TotallyPositive)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            TpVerdict::TotallyPositive => None,
            TpVerdict::NotTotallyPositive(w) => Some(w),
        }
    }
}

pub fn is_totally_positive(a: &Matrix, mode: TpMode) -> Result<TpVerdict> {
    match mode {
        TpMode::Exhaustive { force } => exhaustive(a, force),
        TpMode::Fast => Ok(fast(a)),
    }
}

/// Every square minor, by size, then rows, then columns in lexicographic order.
fn exhaustive(a: &Matrix, force: bool) -> Result<TpVerdict> {
    let (m, n) = (a.rows(), a.cols());
    if m.min(n) > EXHAUSTIVE_LIMIT && !force {
        return Err(Error::TooLarge {
            what: "exhaustive TP check",
            detail: format!(
                "{m}x{n} exceeds min(m,n) <= {EXHAUSTIVE_LIMIT}; use the fast check or force"
            ),
        });
    }
    for k in 1..=m.min(n) {
        let col_sets = index_subsets(n, k);
        for rows in index_subsets(m, k) {
            for cols in &col_sets {
                let value = a.minor_at(&rows, cols);
                if !value.is_positive() {
                    return Ok(TpVerdict::NotTotallyPositive(Witness::Minor {
                        rows: IndexSet::new(rows)?,
                        cols: IndexSet::new(cols.clone())?,
                        value,
                    }));
                }
            }
        }
    }
    Ok(TpVerdict::TotallyPositive)
}

fn fast(a: &Matrix) -> TpVerdict {
    let trace = match cauchon_trace(a, StepOrder::ReverseLex) {
        Ok(t) => t,
        Err(Error::ZeroPivot { row, col }) => {
            return TpVerdict::NotTotallyPositive(Witness::ZeroPivot { row, col })
        }
        Err(_) => return TpVerdict::NotTotallyPositive(Witness::ReconstructionMismatch),
    };
    let t = trace.output().clone();
    if let Some((row, col)) = t.first_non_positive() {
        return TpVerdict::NotTotallyPositive(Witness::NonPositiveScaffold { row, col });
    }
    let graph = ScaffoldGraph::new(t, Orientation::Gamma).expect("positivity checked above");
    if graph.path_matrix() != *a {
        return TpVerdict::NotTotallyPositive(Witness::ReconstructionMismatch);
    }
    TpVerdict::TotallyPositive
}

/// Fails with [`Error::NotTotallyPositive`] unless the fast check passes.
pub fn ensure_tp(a: &Matrix) -> Result<()> {
    if fast(a).is_tp() {
        Ok(())
    } else {
        Err(Error::NotTotallyPositive)
    }
}
