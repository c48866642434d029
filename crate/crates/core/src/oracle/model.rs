//! Four-level rotating-frame model: level energies, field couplings,
//! population decay channels and per-coherence damping.

use std::sync::atomic::{AtomicBool, Ordering};

use num_complex::Complex;

use crate::drive::DriveConfig;
use crate::rates::{CoherenceDampings, DecayRates};
use crate::scalar::{Cplx, Real};

// Sweeps build one model per point; only the first override is worth a warning.
static SIGNAL_DETUNING_WARNED: AtomicBool = AtomicBool::new(false);

/// Number of atomic levels.
pub const LEVELS: usize = 4;

/// One field coupling |upper⟩⟨lower| (levels are 0-based here: level 1 of
/// the scheme is index 0).
///
/// The Hamiltonian element is −Ω·e^{−iφ} on |upper⟩⟨lower| plus its
/// conjugate. `frame_residual` is the frequency left over after moving to
/// the rotating frame; a time-independent generator needs it to be zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coupling<T> {
    pub upper: usize,
    pub lower: usize,
    pub rabi: T,
    pub phase: T,
    pub frame_residual: T,
    pub probe: bool,
}

impl<T: Real> Coupling<T> {
    /// Matrix element ⟨upper|H|lower⟩ in units of ħ.
    pub fn element(&self) -> Cplx<T> {
        -Complex::from_polar(self.rabi, -self.phase)
    }
}

/// Population transfer `from → to` at `rate`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decay<T> {
    pub from: usize,
    pub to: usize,
    pub rate: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LevelModel<T> {
    /// Rotating-frame level energies over ħ (rad/s).
    pub energies: [T; LEVELS],
    pub couplings: Vec<Coupling<T>>,
    pub decays: Vec<Decay<T>>,
    /// Symmetric coherence damping Γ(i, j); the diagonal is unused.
    pub dephasing: [[T; LEVELS]; LEVELS],
}

impl<T: Real> LevelModel<T> {
    /// The four-level scheme: probe magnetic 1–2, two-photon control 1–3,
    /// probe electric 3–4, signal 2–4.
    ///
    /// The frame puts level 2 at Δm, level 3 at Δc and level 4 at Δc + Δp,
    /// which requires Δs = Δc + Δp − Δm. The supplied Δs is ignored (a
    /// warning is logged when it differs); see [`LevelModel::strict`] for
    /// the checked variant.
    pub fn from_parameters(
        dampings: &CoherenceDampings<T>,
        drive: &DriveConfig<T>,
        rates: &DecayRates<T>,
    ) -> Self {
        let closed = drive.loop_closed_delta_s();
        if (drive.delta_s - closed).abs() > T::epsilon() * closed.abs().max(drive.omega_c) {
            let level = if SIGNAL_DETUNING_WARNED.swap(true, Ordering::Relaxed) {
                log::Level::Debug
            } else {
                log::Level::Warn
            };
            log::log!(
                level,
                "signal detuning Δs = {} ignored; loop closure fixes it at Δc + Δp − Δm = {}",
                drive.delta_s,
                closed
            );
        }
        Self::build(dampings, drive, rates, T::zero())
    }

    /// Like [`LevelModel::from_parameters`] but keeps the mismatch between
    /// the supplied Δs and the loop-closed value as the signal coupling's
    /// frame residual, so generator construction rejects it.
    pub fn strict(
        dampings: &CoherenceDampings<T>,
        drive: &DriveConfig<T>,
        rates: &DecayRates<T>,
    ) -> Self {
        let residual = drive.delta_s - drive.loop_closed_delta_s();
        Self::build(dampings, drive, rates, residual)
    }

    fn build(
        dampings: &CoherenceDampings<T>,
        drive: &DriveConfig<T>,
        rates: &DecayRates<T>,
        signal_residual: T,
    ) -> Self {
        let z = T::zero();
        let coupling = |upper, lower, rabi, phase, probe| Coupling {
            upper,
            lower,
            rabi,
            phase,
            frame_residual: z,
            probe,
        };
        let mut signal = coupling(3, 1, drive.omega_s, z, false);
        signal.frame_residual = signal_residual;
        let couplings = vec![
            coupling(1, 0, drive.omega_pm, z, true),
            coupling(2, 0, drive.omega_c, drive.theta, false),
            coupling(3, 2, drive.omega_pe, z, true),
            signal,
        ];
        let decays = vec![
            Decay {
                from: 3,
                to: 2,
                rate: rates.gamma43,
            },
            Decay {
                from: 3,
                to: 1,
                rate: rates.gamma42,
            },
            Decay {
                from: 2,
                to: 0,
                rate: rates.gamma31,
            },
            Decay {
                from: 1,
                to: 0,
                rate: rates.gamma21,
            },
        ];
        let mut dephasing = [[z; LEVELS]; LEVELS];
        let pairs = [
            (1, 0, dampings.g1),
            (2, 0, dampings.g2),
            (3, 0, dampings.g3),
            (3, 1, dampings.g4),
            (3, 2, dampings.g5),
            (2, 1, dampings.g6),
        ];
        for (i, j, g) in pairs {
            dephasing[i][j] = g;
            dephasing[j][i] = g;
        }
        Self {
            energies: [
                z,
                drive.delta_m,
                drive.delta_c,
                drive.delta_c + drive.delta_p,
            ],
            couplings,
            decays,
            dephasing,
        }
    }

    /// Model with every coupling and decay removed.
    pub fn empty() -> Self {
        Self {
            energies: [T::zero(); LEVELS],
            couplings: Vec::new(),
            decays: Vec::new(),
            dephasing: [[T::zero(); LEVELS]; LEVELS],
        }
    }

    /// The same model with the probe couplings dropped.
    pub fn without_probe(&self) -> Self {
        Self {
            couplings: self
                .couplings
                .iter()
                .copied()
                .filter(|c| !c.probe)
                .collect(),
            ..self.clone()
        }
    }

    /// Probe couplings only.
    pub fn probe_couplings(&self) -> impl Iterator<Item = &Coupling<T>> {
        self.couplings.iter().filter(|c| c.probe)
    }

    /// Replaces the probe amplitudes (Ωpe on 3–4, Ωpm on 1–2).
    pub fn with_probe(&self, omega_pe: T, omega_pm: T) -> Self {
        let mut out = self.clone();
        for c in out.couplings.iter_mut().filter(|c| c.probe) {
            c.rabi = if c.lower == 0 { omega_pm } else { omega_pe };
        }
        out
    }

    /// Hamiltonian over ħ for the given coupling subset, row major.
    pub fn hamiltonian<'a>(
        energies: Option<&[T; LEVELS]>,
        couplings: impl IntoIterator<Item = &'a Coupling<T>>,
    ) -> [[Cplx<T>; LEVELS]; LEVELS] {
        let zero = Complex::new(T::zero(), T::zero());
        let mut h = [[zero; LEVELS]; LEVELS];
        if let Some(e) = energies {
            for (k, &ek) in e.iter().enumerate() {
                h[k][k] = Complex::new(ek, T::zero());
            }
        }
        for c in couplings {
            let v = c.element();
            h[c.upper][c.lower] = h[c.upper][c.lower] + v;
            h[c.lower][c.upper] = h[c.lower][c.upper] + v.conj();
        }
        h
    }
}
