//! Library behind the `lqu` command-line tool: sweep configuration and
//! execution, dataset presets, output serialization, and config-file
//! handling. The binary in `main.rs` is a thin argument-parsing layer over
//! these modules, so everything here is testable without spawning a process.

#![forbid(unsafe_code)]

pub mod config;
pub mod emit;
pub mod error;
pub mod figures;
pub mod sweep;

pub use config::FileConfig;
pub use emit::{emit, render, to_csv, to_json, DataFormat, CSV_HEADER};
pub use error::CliError;
pub use figures::FigurePreset;
pub use sweep::{grid, run_sweep, Spacing, SweepAxis, SweepConfig, SweepModel, SweepRow};
