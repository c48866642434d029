//! Field amplitudes, detunings and the loop phase.

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Drive fields in absolute units: Rabi frequencies and detunings in rad/s,
/// `theta` in radians.
///
/// `theta` is the single loop phase θc − θs; the electric and magnetic probe
/// components share a phase. `delta_s` is carried for completeness only.
/// With all four fields on, the rotating frame is time independent only if
/// Δs = Δc + Δp − Δm, and none of the closed forms depend on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveConfig<T> {
    pub omega_pe: T,
    pub omega_pm: T,
    pub omega_c: T,
    pub omega_s: T,
    pub delta_p: T,
    pub delta_c: T,
    pub delta_s: T,
    pub delta_m: T,
    pub theta: T,
}

impl<T: Real> DriveConfig<T> {
    /// Reference drive at probe detuning `delta_p` and signal Rabi
    /// frequency `omega_s`: Ωpe = 0.05γ, Ωc = 8γ, Δc = Δm = 0.005γ, loop-closed
    /// Δs = Δc + Δp − Δm, θ = π/6, Ωpm tied to Ωpe through a shared probe beam.
    pub fn reference(gamma: T, omega_s: T, delta_p: T, d34: T, mu12: T) -> Result<Self> {
        let omega_pe = T::lit(0.05) * gamma;
        Ok(Self {
            omega_pe,
            omega_pm: probe_magnetic_rabi(omega_pe, d34, mu12)?,
            omega_c: T::lit(8.0) * gamma,
            omega_s,
            delta_p,
            delta_c: T::lit(0.005) * gamma,
            delta_s: delta_p,
            delta_m: T::lit(0.005) * gamma,
            theta: T::PI() / T::lit(6.0),
        })
    }

    /// Same drive with both probe components scaled by `s`.
    pub fn scale_probe(&self, s: T) -> Self {
        Self {
            omega_pe: self.omega_pe * s,
            omega_pm: self.omega_pm * s,
            ..*self
        }
    }

    /// Weak-probe regime: Ωpe < 0.1·Ωc.
    pub fn is_weak_probe(&self) -> bool {
        self.omega_pe < T::lit(0.1) * self.omega_c
    }

    /// Signal detuning that closes the coupling loop, Δc + Δp − Δm.
    pub fn loop_closed_delta_s(&self) -> T {
        self.delta_c + self.delta_p - self.delta_m
    }

    pub fn validate(&self) -> Result<()> {
        let non_negative = [
            ("omega_pe", self.omega_pe),
            ("omega_pm", self.omega_pm),
            ("omega_c", self.omega_c),
            ("omega_s", self.omega_s),
        ];
        for (name, v) in non_negative {
            if !(v >= T::zero()) || !v.is_finite() {
                return Err(Error::InvalidRate {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        let finite = [
            ("delta_p", self.delta_p),
            ("delta_c", self.delta_c),
            ("delta_s", self.delta_s),
            ("delta_m", self.delta_m),
            ("theta", self.theta),
        ];
        for (name, v) in finite {
            if !v.is_finite() {
                return Err(Error::InvalidRate {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(())
    }
}

/// Magnetic probe Rabi frequency of the same beam: Ωpm = Ωpe·μ12 / (c·d34),
/// from Bp = Ep/c.
pub fn probe_magnetic_rabi<T: Real>(omega_pe: T, d34: T, mu12: T) -> Result<T> {
    if !(d34 > T::zero()) {
        return Err(Error::NonPositive {
            name: "d34",
            value: d34.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(omega_pe * mu12 / (T::lit(SPEED_OF_LIGHT) * d34))
}
