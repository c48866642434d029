//! Exact first-order probe response of the master equation.
//!
//! With L = L0 + L1, where L1 = −i[H_probe, ·] is linear in the probe
//! amplitudes, the first-order state solves L0(ρ1) = −L1(ρ0) with
//! tr ρ1 = 0 and L0(ρ0) = 0, tr ρ0 = 1.

use crate::coherence::Coherences;
use crate::drive::DriveConfig;
use crate::error::Result;
use crate::oracle::generator::{build_generator, probe_generator};
use crate::oracle::model::LevelModel;
use crate::oracle::state::DensityState;
use crate::oracle::steady::SteadyStateSolver;
use crate::rates::{CoherenceDampings, DecayRates};
use crate::scalar::{Cplx, Real};

#[derive(Debug, Clone, Copy)]
pub struct LinearResponse<T> {
    pub coherences: Coherences<T>,
    /// Probe-free steady state ρ0.
    pub unperturbed: DensityState<T>,
    /// First-order correction ρ1 (traceless).
    pub first_order: DensityState<T>,
    /// Pivot ratio of the factored probe-free system.
    pub pivot_ratio: T,
}

fn extract<T: Real>(rho: &DensityState<T>) -> Coherences<T> {
    Coherences {
        rho43: rho.rho[3][2],
        rho21: rho.rho[1][0],
    }
}

/// First-order response of `model` to its own probe couplings.
pub fn linear_response<T: Real>(model: &LevelModel<T>) -> Result<LinearResponse<T>> {
    let l0 = build_generator(&model.without_probe())?;
    let l1 = probe_generator(model)?;
    let solver = SteadyStateSolver::new(&l0)?;
    let rho0 = solver.steady_state();
    let mut rhs = l1.apply(&rho0);
    for row in rhs.rho.iter_mut() {
        for z in row.iter_mut() {
            *z = -*z;
        }
    }
    let rho1 = solver.solve_traceless(&rhs);
    Ok(LinearResponse {
        coherences: extract(&rho1),
        unperturbed: rho0,
        first_order: rho1,
        pivot_ratio: solver.pivot_ratio(),
    })
}

/// [`linear_response`] with the probe amplitudes replaced by (Ωpe, Ωpm).
pub fn linear_response_at<T: Real>(
    model: &LevelModel<T>,
    omega_pe: T,
    omega_pm: T,
) -> Result<LinearResponse<T>> {
    linear_response(&model.with_probe(omega_pe, omega_pm))
}

/// Master-equation coherences for the given parameters.
pub fn oracle_coherences<T: Real>(
    dampings: &CoherenceDampings<T>,
    drive: &DriveConfig<T>,
    rates: &DecayRates<T>,
) -> Result<Coherences<T>> {
    linear_response(&LevelModel::from_parameters(dampings, drive, rates)).map(|r| r.coherences)
}

/// ρ43 and ρ21 of the full (all orders) steady state at finite probe.
pub fn finite_probe_coherences<T: Real>(model: &LevelModel<T>) -> Result<Coherences<T>> {
    let l = build_generator(model)?;
    let rho = SteadyStateSolver::new(&l)?.steady_state();
    Ok(extract(&rho))
}

/// Richardson extrapolation of c(h)/h to h → 0 from step sizes h and h/2,
/// assuming an even error series in h.
pub fn richardson<T: Real>(at_h: Cplx<T>, at_half: Cplx<T>) -> Cplx<T> {
    (at_half * T::lit(4.0) - at_h) / T::lit(3.0)
}
