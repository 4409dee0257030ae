//! Deterministic model of airline cabin configurations: per-passenger,
//! per-flight and lifetime CO2 emissions plus revenue and revenue-neutral
//! repricing for a baseline 3-class cabin versus an all-economy (or custom)
//! layout, with cell-by-cell reconciliation against published reference
//! tables.
//!
//! Pipeline: [`ingest`] loads and validates the CSV/TOML dataset, [`cabin`]
//! builds composite aircraft and scenario configurations, [`emissions`]
//! calibrates the per-flight regression and evaluates emissions, [`finance`]
//! aggregates fares and prices, [`pipeline`] runs the whole model, and
//! [`report`] aggregates per-aircraft results into body-class tables,
//! exports them, and reconciles them against the embedded references.
//!
//! Everything is pure and deterministic: identical inputs produce
//! byte-identical exports, and there is no randomness anywhere.

pub mod cabin;
pub mod emissions;
mod error;
pub mod finance;
pub mod ingest;
pub mod pipeline;
pub mod report;
pub mod types;

pub use error::{Error, Result};
