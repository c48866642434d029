//! A complete parameter point and the coherence models that evaluate it.

use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::coefficients::ClosedForm;
use crate::coherence::{coherences, Coherences};
use crate::drive::DriveConfig;
use crate::error::Result;
use crate::optics::{medium_response, MediumConstants, MediumResponse};
use crate::oracle::response::oracle_coherences;
use crate::rates::{derive_dampings_with, CoherenceDampings, DampingOptions, DecayRates};
use crate::scalar::Real;

/// How the coherences are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CoherenceModel {
    /// Published closed form, verbatim.
    #[default]
    Printed,
    /// Closed form with the three errata fixed (see [`ClosedForm`]).
    Corrected,
    /// Linear response of the four-level master equation.
    MasterEquation,
}

impl CoherenceModel {
    pub const ALL: [CoherenceModel; 3] = [
        CoherenceModel::Printed,
        CoherenceModel::Corrected,
        CoherenceModel::MasterEquation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CoherenceModel::Printed => "printed",
            CoherenceModel::Corrected => "corrected",
            CoherenceModel::MasterEquation => "master_equation",
        }
    }
}

impl fmt::Display for CoherenceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoherenceModel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown coherence model `{s}` (expected printed, corrected or master_equation)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterPoint<T> {
    pub rates: DecayRates<T>,
    pub drive: DriveConfig<T>,
    pub damping: DampingOptions,
}

impl<T: Real> ParameterPoint<T> {
    /// Reference point at signal Rabi frequency `omega_s` and probe detuning
    /// `delta_p`, both in units of γ = 1e7 s⁻¹.
    pub fn reference(omega_s: T, delta_p: T) -> Self {
        let gamma = T::lit(1e7);
        let k = MediumConstants::<T>::reference();
        Self {
            rates: DecayRates::reference(gamma),
            drive: DriveConfig::reference(gamma, omega_s * gamma, delta_p * gamma, k.d34, k.mu12)
                .expect("reference dipole is positive"),
            damping: DampingOptions::default(),
        }
    }

    pub fn dampings(&self) -> Result<CoherenceDampings<T>> {
        derive_dampings_with(&self.rates, self.damping)
    }

    pub fn coherences(&self, model: CoherenceModel) -> Result<Coherences<T>> {
        let damp = self.dampings()?;
        self.drive.validate()?;
        match model {
            CoherenceModel::Printed => {
                coherences(ClosedForm::Printed, &damp, &self.drive, &self.rates)
            }
            CoherenceModel::Corrected => {
                coherences(ClosedForm::Corrected, &damp, &self.drive, &self.rates)
            }
            CoherenceModel::MasterEquation => oracle_coherences(&damp, &self.drive, &self.rates),
        }
    }

    pub fn response(
        &self,
        model: CoherenceModel,
        medium: &MediumConstants<T>,
    ) -> Result<MediumResponse<T>> {
        let coh = self.coherences(model)?;
        medium_response(&coh, self.drive.omega_pe, medium)
    }
}

impl ParameterPoint<f64> {
    /// Canonical text of every input, in units of γ, round-trip formatted.
    pub fn canonical_text(&self) -> String {
        let g = self.rates.gamma_scale;
        let r = &self.rates;
        let d = &self.drive;
        format!(
            "gamma={:?};gamma43={:?};gamma42={:?};gamma31={:?};gamma21={:?};gamma1={:?};gamma_c={:?};\
             g6c={};omega_pe={:?};omega_pm={:?};omega_c={:?};omega_s={:?};delta_p={:?};delta_c={:?};\
             delta_m={:?};theta={:?}",
            g,
            r.gamma43 / g,
            r.gamma42 / g,
            r.gamma31 / g,
            r.gamma21 / g,
            r.gamma1 / g,
            r.gamma_c / g,
            self.damping.gamma6_includes_dephasing,
            d.omega_pe / g,
            d.omega_pm / g,
            d.omega_c / g,
            d.omega_s / g,
            d.delta_p / g,
            d.delta_c / g,
            d.delta_m / g,
            d.theta,
        )
    }

    /// First 16 hex digits of SHA-256 over [`Self::canonical_text`].
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.canonical_text().as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_is_stable_and_sensitive() {
        let a = ParameterPoint::<f64>::reference(14.0, -5.0);
        assert_eq!(a.hash(), a.hash());
        assert_eq!(a.hash().len(), 16);
        let b = ParameterPoint::<f64>::reference(14.0, 5.0);
        assert_ne!(a.hash(), b.hash());
    }

    #[test]
    fn model_names_round_trip() {
        for m in CoherenceModel::ALL {
            assert_eq!(m.as_str().parse::<CoherenceModel>().unwrap(), m);
        }
        assert!("exact".parse::<CoherenceModel>().is_err());
    }
}
