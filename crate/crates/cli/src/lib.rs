//! Batch driver for the parakit workbench: corpus files, the verification
//! suites and budget tables.
//!
//! Reports are deterministic for a fixed configuration, corpus and seed.
//! Timing is recorded only on request.

pub mod app;
pub mod budget;
pub mod config;
pub mod corpus;
pub mod output;
pub mod suites;

pub use config::{CapsSpec, Format, RunConfig};
