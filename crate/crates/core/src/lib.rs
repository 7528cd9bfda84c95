//! Scaffolding theory of totally positive matrices.
//!
//! A positive weight matrix `T` defines a planar scaffolding graph; path sums give a
//! TP matrix `X(T)` and Cauchon's algorithm recovers `T` from `X`. On top of that the
//! crate borders TP matrices and inserts rows or columns while keeping total positivity.

pub mod bordering;
pub mod cauchon;
pub mod cli;
pub mod error;
pub mod insertion;
pub mod io;
pub mod matrix;
pub mod positivity;
pub mod rational;
pub mod scaffold;

pub use bordering::{border, recover_border_params, BorderParams, BorderSide};
pub use cauchon::{cauchon_trace, gamma_scaffold, le_scaffold, scaffold, CauchonTrace, StepOrder};
pub use error::{Error, Result};
pub use insertion::{insert_column, insert_row, Candidate, InsertionSolution, InsertionSystem};
pub use matrix::{IndexSet, Matrix};
pub use positivity::{is_totally_positive, TpMode, TpVerdict, Witness};
pub use rational::Rational;
pub use scaffold::{x_of_t, Orientation, Path, PathSystem, ScaffoldGraph};
