//! Closed form vs. master equation over a coarse grid.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::Error;
use crate::oracle::compare::{compare, Agreement, Discrepancy};
use crate::point::CoherenceModel;
use crate::sweep::config::{linspace, SweepConfig};
use crate::sweep::grid::{with_workers, SweepError};

#[derive(Debug, Clone, PartialEq)]
pub struct PointCheck {
    pub omega_s_over_gamma: f64,
    pub delta_p_over_gamma: f64,
    pub outcome: Result<Discrepancy<f64>, Error>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlayReport {
    pub omega_s_over_gamma: f64,
    /// (relative error, Δp/γ) of the worst ρ43 point.
    pub worst_rho43: (f64, f64),
    pub worst_rho21: (f64, f64),
    /// Δp/γ intervals where either coherence exceeds the band.
    pub mismatch_regions: Vec<(f64, f64)>,
    pub failed_points: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub model: CoherenceModel,
    pub band: f64,
    pub checks: Vec<PointCheck>,
    pub overlays: Vec<OverlayReport>,
}

impl VerifyReport {
    pub fn worst(&self) -> f64 {
        self.overlays
            .iter()
            .map(|o| o.worst_rho43.0.max(o.worst_rho21.0))
            .fold(0.0, f64::max)
    }

    pub fn failed_points(&self) -> usize {
        self.overlays.iter().map(|o| o.failed_points).sum()
    }

    pub fn class(&self) -> Agreement {
        if self.failed_points() > 0 {
            Agreement::Structural
        } else {
            Agreement::classify(self.worst())
        }
    }

    /// Every point evaluated and below the band.
    pub fn passes(&self) -> bool {
        self.failed_points() == 0 && self.worst() < self.band
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "verify: {} closed form vs master equation, {} points, band {:e}",
            self.model,
            self.checks.len(),
            self.band
        );
        for o in &self.overlays {
            let _ = writeln!(
                s,
                "  Ωs = {}γ: worst ρ43 {:.3e} at Δp = {}γ, worst ρ21 {:.3e} at Δp = {}γ, failed points {}",
                o.omega_s_over_gamma,
                o.worst_rho43.0,
                o.worst_rho43.1,
                o.worst_rho21.0,
                o.worst_rho21.1,
                o.failed_points
            );
            if !o.mismatch_regions.is_empty() {
                let regions: Vec<String> = o
                    .mismatch_regions
                    .iter()
                    .map(|(a, b)| format!("[{a}, {b}]"))
                    .collect();
                let _ = writeln!(s, "    above band on Δp/γ ∈ {}", regions.join(" ∪ "));
            }
        }
        let _ = writeln!(
            s,
            "worst relative error {:.3e} ({}); {}",
            self.worst(),
            self.class(),
            if self.passes() { "PASS" } else { "FAIL" }
        );
        s
    }
}

fn summarize(omega_s: f64, checks: &[&PointCheck], band: f64) -> OverlayReport {
    let mut worst43 = (0.0, f64::NAN);
    let mut worst21 = (0.0, f64::NAN);
    let mut regions = Vec::new();
    let mut open: Option<(f64, f64)> = None;
    let mut failed = 0;
    for c in checks {
        let dp = c.delta_p_over_gamma;
        let bad = match &c.outcome {
            Ok(d) => {
                if d.rho43 >= worst43.0 {
                    worst43 = (d.rho43, dp);
                }
                if d.rho21 >= worst21.0 {
                    worst21 = (d.rho21, dp);
                }
                d.worst() >= band
            }
            Err(_) => {
                failed += 1;
                true
            }
        };
        open = match (open, bad) {
            (Some((a, _)), true) => Some((a, dp)),
            (None, true) => Some((dp, dp)),
            (Some(r), false) => {
                regions.push(r);
                None
            }
            (None, false) => None,
        };
    }
    regions.extend(open);
    OverlayReport {
        omega_s_over_gamma: omega_s,
        worst_rho43: worst43,
        worst_rho21: worst21,
        mismatch_regions: regions,
        failed_points: failed,
    }
}

/// Compares `cfg.model` against the master equation on `cfg.verify_points`
/// detunings per overlay.
pub fn verify(cfg: &SweepConfig, threads: Option<usize>) -> Result<VerifyReport, SweepError> {
    let deltas = linspace(cfg.delta_p_from, cfg.delta_p_to, cfg.verify_points);
    let jobs: Vec<(f64, f64)> = cfg
        .omega_s
        .iter()
        .flat_map(|&os| deltas.iter().map(move |&dp| (os, dp)))
        .collect();
    let checks: Vec<PointCheck> = with_workers(threads, || {
        jobs.par_iter()
            .map(|&(os, dp)| {
                let p = cfg.point(os, dp);
                let outcome = p.coherences(cfg.model).and_then(|analytic| {
                    let oracle = p.coherences(CoherenceModel::MasterEquation)?;
                    Ok(compare(&analytic, &oracle))
                });
                PointCheck {
                    omega_s_over_gamma: os,
                    delta_p_over_gamma: dp,
                    outcome,
                }
            })
            .collect()
    })?;
    if checks.is_empty() {
        return Err(SweepError::Empty);
    }
    let overlays = cfg
        .omega_s
        .iter()
        .map(|&os| {
            let mine: Vec<&PointCheck> = checks
                .iter()
                .filter(|c| c.omega_s_over_gamma == os)
                .collect();
            summarize(os, &mine, cfg.verify_band)
        })
        .collect();
    Ok(VerifyReport {
        model: cfg.model,
        band: cfg.verify_band,
        checks,
        overlays,
    })
}
