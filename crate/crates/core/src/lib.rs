//! Executable workbench for parameterized complexity in the promise-problem
//! formalization.
//!
//! Parameters, parameterizations, algorithm families and uniform reductions are
//! first-class values here. Every definition comes with a checker that runs
//! over a finite truncation of the instance universe and returns a
//! [`VerificationReport`] with counterexample witnesses.
//!
//! Layering, bottom-up:
//!
//! - [`kernel`]: instances, universes, languages, parameters, slices, the
//!   `≼` preorder and the lattice of parameterizations.
//! - [`promise`]: promise problems, solvers and promise reductions.
//! - [`families`]: algorithm families, the minimal-index selector,
//!   strong monotonicity, OR-combination and (strongly) uniform membership.
//! - [`reductions`]: uniform reductions, composition and solver pull-back.
//! - [`bridge`]: translations between pair-based, function-based and
//!   promise-based formalizations.
//! - [`graphlab`]: graphs, graph6, graph parameters, oracles and the concrete
//!   algorithm families everything above is instantiated with.

pub mod bridge;
pub mod error;
pub mod families;
pub mod graphlab;
pub mod kernel;
pub mod meter;
pub mod promise;
pub mod reductions;
pub mod report;

pub use error::{Error, Result};
pub use meter::{Meter, StepBudget};
pub use report::{Cell, Status, Table, VerificationReport, Witness};
