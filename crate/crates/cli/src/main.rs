use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use eit_nri::oracle::golden::{reference_points, GoldenTable};
use eit_nri::sweep::{
    emit_csv, emit_plotdata, load_config, run_sweep_with, verify, write_csv, SweepConfig,
};
use eit_nri::CoherenceModel;

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "eit-nri",
    version,
    about = "Negative-index response of a dense four-level EIT vapor"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Flat key = value configuration file; omitted keys use reference values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Override `coherence_model` (printed, corrected, master_equation).
    #[arg(long)]
    model: Option<CoherenceModel>,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the probe detuning for every Ωs overlay and write CSV.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// CSV output path (default: `csv_out` from the config, else stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write plot data and a gnuplot script.
        #[arg(long)]
        plot: bool,
    },
    /// Compare the closed form against the master equation.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Print the report and exit 0 regardless of the outcome.
        #[arg(long)]
        report_only: bool,
    },
    /// Golden oracle data.
    Golden {
        #[command(subcommand)]
        action: GoldenAction,
    },
}

#[derive(Subcommand)]
enum GoldenAction {
    /// Recompute the oracle golden table.
    Regen {
        #[arg(long)]
        out: PathBuf,
    },
}

fn config(common: &Common) -> Result<SweepConfig, ExitCode> {
    let mut cfg = match &common.config {
        Some(p) => load_config(p).map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        })?,
        None => SweepConfig::default(),
    };
    if let Some(m) = common.model {
        cfg.model = m;
    }
    Ok(cfg)
}

fn io_fail(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_IO)
}

fn sweep(common: Common, out: Option<PathBuf>, plot: bool) -> Result<(), ExitCode> {
    let cfg = config(&common)?;
    let start = Instant::now();
    let grid = run_sweep_with(&cfg, common.threads).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })?;
    log::info!(
        "{} records ({} failed) in {:.3} s",
        grid.records.len(),
        grid.error_count(),
        start.elapsed().as_secs_f64()
    );
    let csv_path = out.or_else(|| cfg.csv_out.clone());
    match &csv_path {
        Some(p) => emit_csv(&grid, p).map_err(io_fail)?,
        None => write_csv(&grid, io::stdout().lock()).map_err(io_fail)?,
    }
    if plot {
        let data = cfg
            .plot_out
            .clone()
            .or_else(|| csv_path.as_deref().map(|p| p.with_extension("dat")))
            .unwrap_or_else(|| PathBuf::from("sweep.dat"));
        let script = emit_plotdata(&grid, &data).map_err(io_fail)?;
        eprintln!(
            "plot data: {} (script {})",
            data.display(),
            script.display()
        );
    }
    eprintln!(
        "{} records, {} failed points, model {}",
        grid.records.len(),
        grid.error_count(),
        grid.model
    );
    Ok(())
}

fn run_verify(common: Common, report_only: bool) -> Result<(), ExitCode> {
    let cfg = config(&common)?;
    let report = verify(&cfg, common.threads).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })?;
    let mut stdout = io::stdout().lock();
    stdout
        .write_all(report.to_text().as_bytes())
        .map_err(io_fail)?;
    if report_only || report.passes() {
        Ok(())
    } else {
        Err(ExitCode::from(EXIT_VERIFY))
    }
}

fn golden_regen(out: &Path) -> Result<(), ExitCode> {
    let table = GoldenTable::generate(&reference_points()).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_VERIFY)
    })?;
    std::fs::write(out, table.to_text()).map_err(|e| io_fail(format!("{}: {e}", out.display())))?;
    eprintln!(
        "{} entries written to {}",
        table.entries.len(),
        out.display()
    );
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Sweep { common, out, plot } => sweep(common, out, plot),
        Command::Verify {
            common,
            report_only,
        } => run_verify(common, report_only),
        Command::Golden {
            action: GoldenAction::Regen { out },
        } => golden_regen(&out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
