//! Spontaneous/collisional rates and the coherence dampings built from them.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Fine-structure suppression of the magnetic-dipole decay, `(1/137)²`.
pub const MAGNETIC_DECAY_SUPPRESSION: f64 = 1.0 / (137.0 * 137.0);

/// Decay and dephasing rates in absolute units (s⁻¹).
///
/// `gamma_scale` is the unit γ the CLI reports in; it does not enter any
/// formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayRates<T> {
    pub gamma_scale: T,
    pub gamma43: T,
    pub gamma42: T,
    pub gamma31: T,
    pub gamma21: T,
    pub gamma1: T,
    pub gamma_c: T,
}

impl<T: Real> DecayRates<T> {
    /// Reference rates: γ43 = 0.8γ, γ42 = 1.5γ, γ31 = 1.2γ, γc = 0.8γ,
    /// γ21 = γ43/137², γ1 = 0.
    pub fn reference(gamma: T) -> Self {
        let gamma43 = T::lit(0.8) * gamma;
        Self {
            gamma_scale: gamma,
            gamma43,
            gamma42: T::lit(1.5) * gamma,
            gamma31: T::lit(1.2) * gamma,
            gamma21: gamma43 * T::lit(MAGNETIC_DECAY_SUPPRESSION),
            gamma1: T::zero(),
            gamma_c: T::lit(0.8) * gamma,
        }
    }

    /// All rates zero, expressed against the unit `gamma`.
    pub fn zero(gamma: T) -> Self {
        Self {
            gamma_scale: gamma,
            gamma43: T::zero(),
            gamma42: T::zero(),
            gamma31: T::zero(),
            gamma21: T::zero(),
            gamma1: T::zero(),
            gamma_c: T::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let named = [
            ("gamma43", self.gamma43),
            ("gamma42", self.gamma42),
            ("gamma31", self.gamma31),
            ("gamma21", self.gamma21),
            ("gamma1", self.gamma1),
            ("gamma_c", self.gamma_c),
        ];
        for (name, v) in named {
            if !(v >= T::zero()) || !v.is_finite() {
                return Err(Error::InvalidRate {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        if !(self.gamma_scale > T::zero()) || !self.gamma_scale.is_finite() {
            return Err(Error::NonPositive {
                name: "gamma_scale",
                value: self.gamma_scale.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }
}

/// Damping rates Γ1..Γ6 of the coherences ρ21, ρ31, ρ41, ρ42, ρ43, ρ32.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceDampings<T> {
    pub g1: T,
    pub g2: T,
    pub g3: T,
    pub g4: T,
    pub g5: T,
    pub g6: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DampingOptions {
    /// Add γc to Γ6. Off by default: Γ6 is the only damping written
    /// without the collisional term.
    pub gamma6_includes_dephasing: bool,
}

pub fn derive_dampings<T: Real>(rates: &DecayRates<T>) -> Result<CoherenceDampings<T>> {
    derive_dampings_with(rates, DampingOptions::default())
}

pub fn derive_dampings_with<T: Real>(
    rates: &DecayRates<T>,
    opts: DampingOptions,
) -> Result<CoherenceDampings<T>> {
    rates.validate()?;
    let h = T::half();
    let r = rates;
    let g6_extra = if opts.gamma6_includes_dephasing {
        r.gamma_c
    } else {
        T::zero()
    };
    Ok(CoherenceDampings {
        g1: h * (r.gamma1 + r.gamma21) + r.gamma_c,
        g2: h * (r.gamma1 + r.gamma31) + r.gamma_c,
        g3: h * (r.gamma1 + r.gamma42 + r.gamma43) + r.gamma_c,
        g4: h * (r.gamma21 + r.gamma42 + r.gamma43) + r.gamma_c,
        g5: h * (r.gamma31 + r.gamma42 + r.gamma43) + r.gamma_c,
        g6: h * (r.gamma31 + r.gamma21) + g6_extra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAMMA: f64 = 1e7;

    #[test]
    fn magnetic_decay_is_suppressed_by_fine_structure() {
        let r = DecayRates::reference(GAMMA);
        assert!((r.gamma21 / GAMMA - 4.2624e-5).abs() < 1e-8);
    }

    #[test]
    fn zero_rates_give_zero_dampings() {
        let d = derive_dampings(&DecayRates::zero(GAMMA)).unwrap();
        for g in [d.g1, d.g2, d.g3, d.g4, d.g5, d.g6] {
            assert_eq!(g, 0.0);
        }
    }

    #[test]
    fn reference_dampings() {
        let d = derive_dampings(&DecayRates::reference(GAMMA)).unwrap();
        assert!((d.g5 / GAMMA - 2.55).abs() < 1e-12);
        assert!((d.g3 / GAMMA - 1.95).abs() < 1e-12);
        assert!((d.g6 / GAMMA - 0.600_021_312).abs() < 1e-8);
        // the collisional term only shows up with the switch on
        let on = derive_dampings_with(
            &DecayRates::reference(GAMMA),
            DampingOptions {
                gamma6_includes_dephasing: true,
            },
        )
        .unwrap();
        assert!((on.g6 - d.g6 - 0.8 * GAMMA).abs() < 1e-6);
    }

    #[test]
    fn negative_rate_rejected() {
        let mut r = DecayRates::reference(GAMMA);
        r.gamma42 = -1.0;
        assert!(matches!(
            derive_dampings(&r),
            Err(Error::InvalidRate {
                name: "gamma42",
                ..
            })
        ));
    }

    #[test]
    fn works_in_single_precision() {
        let d = derive_dampings(&DecayRates::<f32>::reference(1.0)).unwrap();
        assert!((d.g5 - 2.55).abs() < 1e-6);
    }
}
