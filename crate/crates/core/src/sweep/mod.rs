//! Configuration, detuning sweeps and their CSV / plot-data output.

pub mod config;
pub mod csv;
pub mod grid;
pub mod plot;
pub mod verify;

pub use config::{load_config, ConfigError, SweepConfig};
pub use csv::{emit_csv, write_csv, OutputError, CSV_HEADER};
pub use grid::{run_sweep, run_sweep_with, SweepError, SweepGrid, SweepRecord};
pub use plot::emit_plotdata;
pub use verify::{verify, VerifyReport};
