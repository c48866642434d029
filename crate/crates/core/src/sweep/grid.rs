//! Grid driver: one independent evaluation per (Ωs, Δp) point.

use rayon::prelude::*;

use crate::error::Error;
use crate::optics::{classify_point, MediumResponse, WindowLabel};
use crate::point::CoherenceModel;
use crate::sweep::config::SweepConfig;

/// One grid point. Failed points keep their coordinates and the error.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub omega_s_over_gamma: f64,
    pub delta_p_over_gamma: f64,
    pub outcome: Result<(MediumResponse<f64>, WindowLabel), Error>,
}

impl SweepRecord {
    pub fn response(&self) -> Option<&MediumResponse<f64>> {
        self.outcome.as_ref().ok().map(|(r, _)| r)
    }

    pub fn label(&self) -> Option<WindowLabel> {
        self.outcome.as_ref().ok().map(|(_, l)| *l)
    }

    /// Label column text; failed points get an `ERROR_*` marker.
    pub fn label_text(&self) -> &'static str {
        match &self.outcome {
            Ok((_, l)) => l.as_str(),
            Err(Error::CoherencePole { .. }) => "ERROR_COHERENCE_POLE",
            Err(Error::LocalFieldCatastrophe { .. }) => "ERROR_LOCAL_FIELD_POLE",
            Err(Error::DegenerateSteadyState { .. }) => "ERROR_DEGENERATE_STEADY_STATE",
            Err(Error::PumpingSingularity) => "ERROR_PUMPING_SINGULARITY",
            Err(_) => "ERROR",
        }
    }
}

/// Records ordered overlay-major, Δp ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub model: CoherenceModel,
    pub omega_s: Vec<f64>,
    pub records: Vec<SweepRecord>,
}

impl SweepGrid {
    pub fn overlay(&self, omega_s: f64) -> impl Iterator<Item = &SweepRecord> {
        self.records
            .iter()
            .filter(move |r| r.omega_s_over_gamma == omega_s)
    }

    pub fn error_count(&self) -> usize {
        self.records.iter().filter(|r| r.outcome.is_err()).count()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("sweep produced no records")]
    Empty,
    #[error("cannot build worker pool: {0}")]
    Pool(String),
}

fn evaluate(cfg: &SweepConfig, omega_s: f64, delta_p: f64) -> SweepRecord {
    let outcome = cfg
        .point(omega_s, delta_p)
        .response(cfg.model, &cfg.medium)
        .map(|resp| {
            let label = classify_point(&resp, cfg.fom_threshold);
            (resp, label)
        });
    if let Err(e) = &outcome {
        log::debug!("Ωs = {omega_s}γ, Δp = {delta_p}γ: {e}");
    }
    SweepRecord {
        omega_s_over_gamma: omega_s,
        delta_p_over_gamma: delta_p,
        outcome,
    }
}

/// Runs `f` on a dedicated pool of `threads` workers, or the global pool.
pub fn with_workers<R: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> R + Send,
) -> Result<R, SweepError> {
    match threads {
        None => Ok(f()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| SweepError::Pool(e.to_string())),
    }
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepGrid, SweepError> {
    run_sweep_with(cfg, None)
}

/// [`run_sweep`] on `threads` workers. Output is identical for any worker
/// count.
pub fn run_sweep_with(cfg: &SweepConfig, threads: Option<usize>) -> Result<SweepGrid, SweepError> {
    let deltas = cfg.delta_p_grid();
    let jobs: Vec<(f64, f64)> = cfg
        .omega_s
        .iter()
        .flat_map(|&os| deltas.iter().map(move |&dp| (os, dp)))
        .collect();
    let records: Vec<SweepRecord> = with_workers(threads, || {
        jobs.par_iter()
            .map(|&(os, dp)| evaluate(cfg, os, dp))
            .collect()
    })?;
    if records.is_empty() {
        return Err(SweepError::Empty);
    }
    Ok(SweepGrid {
        model: cfg.model,
        omega_s: cfg.omega_s.clone(),
        records,
    })
}
