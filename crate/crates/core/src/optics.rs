//! Local-field corrected material constants, negative-branch refractive
//! index and figure of merit.

use std::fmt;

use crate::coherence::Coherences;
use crate::constants::{EPSILON_0, HBAR, MU_0, SPEED_OF_LIGHT};
use crate::error::{Error, Field, Result};
use crate::scalar::{Cplx, Real};

/// Clausius–Mossotti denominators smaller than this count as the pole.
pub const LOCAL_FIELD_POLE_TOLERANCE: f64 = 1e-12;

/// Default FOM above which a left-handed point counts as low loss.
pub const DEFAULT_FOM_THRESHOLD: f64 = 100.0;

/// Dipole moments and density of the vapor. The vacuum constants live in
/// [`crate::constants`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumConstants<T> {
    /// Electric dipole moment of the 3–4 transition (C·m).
    pub d34: T,
    /// Magnetic dipole moment of the 1–2 transition (A·m²).
    pub mu12: T,
    /// Atomic number density (m⁻³).
    pub density: T,
}

impl<T: Real> MediumConstants<T> {
    /// d34 = 2.5e-29 C·m, μ12 = 7.0e-23 A·m², N = 5e24 m⁻³.
    pub fn reference() -> Self {
        Self {
            d34: T::lit(2.5e-29),
            mu12: T::lit(7.0e-23),
            density: T::lit(5e24),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("density", self.density), ("d34", self.d34)] {
            if !(v > T::zero()) || !v.is_finite() {
                return Err(Error::NonPositive {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        if !(self.mu12 >= T::zero()) || !self.mu12.is_finite() {
            return Err(Error::InvalidRate {
                name: "mu12",
                value: self.mu12.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }
}

/// Macroscopic response at one probe detuning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumResponse<T> {
    /// Electric polarizability volume (m³).
    pub gamma_e: Cplx<T>,
    /// Magnetic polarizability volume (m³).
    pub gamma_m: Cplx<T>,
    pub chi_e: Cplx<T>,
    pub eps_r: Cplx<T>,
    pub mu_r: Cplx<T>,
    pub n: Cplx<T>,
    /// εr·μr, kept so callers can pick another square-root branch.
    pub n_squared: Cplx<T>,
    pub fom: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WindowLabel {
    LeftHandedLowLoss,
    LeftHandedLossy,
    NotLeftHanded,
}

impl WindowLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            WindowLabel::LeftHandedLowLoss => "LEFT_HANDED_LOW_LOSS",
            WindowLabel::LeftHandedLossy => "LEFT_HANDED_LOSSY",
            WindowLabel::NotLeftHanded => "NOT_LEFT_HANDED",
        }
    }

    pub fn is_left_handed(self) -> bool {
        !matches!(self, WindowLabel::NotLeftHanded)
    }
}

impl fmt::Display for WindowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn probe_on<T: Real>(omega_pe: T) -> Result<()> {
    if omega_pe > T::zero() {
        Ok(())
    } else {
        Err(Error::NonPositive {
            name: "omega_pe",
            value: omega_pe.to_f64().unwrap_or(f64::NAN),
        })
    }
}

/// γe = 2·d34²·ρ43 / (ε0·ħ·Ωpe).
pub fn electric_polarizability<T: Real>(
    rho43: Cplx<T>,
    omega_pe: T,
    k: &MediumConstants<T>,
) -> Result<Cplx<T>> {
    probe_on(omega_pe)?;
    let prefactor = T::two() * k.d34 * k.d34 / (T::lit(EPSILON_0) * T::lit(HBAR) * omega_pe);
    Ok(rho43 * prefactor)
}

/// γm = 2·μ0·μ12·ρ21 / Bp with Bp = ħ·Ωpe / (c·d34).
pub fn magnetic_polarizability<T: Real>(
    rho21: Cplx<T>,
    omega_pe: T,
    k: &MediumConstants<T>,
) -> Result<Cplx<T>> {
    probe_on(omega_pe)?;
    let b_probe = T::lit(HBAR) * omega_pe / (T::lit(SPEED_OF_LIGHT) * k.d34);
    Ok(rho21 * (T::two() * T::lit(MU_0) * k.mu12 / b_probe))
}

fn local_field_denominator<T: Real>(n_gamma: Cplx<T>, field: Field) -> Result<Cplx<T>> {
    let den = -n_gamma / T::lit(3.0) + T::one();
    if !(den.norm() >= T::lit(LOCAL_FIELD_POLE_TOLERANCE)) {
        return Err(Error::LocalFieldCatastrophe {
            field,
            re: n_gamma.re.to_f64().unwrap_or(f64::NAN),
            im: n_gamma.im.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(den)
}

/// χe = Nγe / (1 − Nγe/3).
pub fn electric_susceptibility<T: Real>(gamma_e: Cplx<T>, density: T) -> Result<Cplx<T>> {
    let ng = gamma_e * density;
    Ok(ng / local_field_denominator(ng, Field::Electric)?)
}

/// μr = (1 + ⅔Nγm) / (1 − ⅓Nγm).
pub fn relative_permeability<T: Real>(gamma_m: Cplx<T>, density: T) -> Result<Cplx<T>> {
    let ng = gamma_m * density;
    let den = local_field_denominator(ng, Field::Magnetic)?;
    Ok((ng * (T::two() / T::lit(3.0)) + T::one()) / den)
}

/// Inverse of [`relative_permeability`]: γm = (μr − 1) / (N·(⅔ + μr/3)).
pub fn polarizability_from_permeability<T: Real>(mu_r: Cplx<T>, density: T) -> Result<Cplx<T>> {
    let three = T::lit(3.0);
    let den = mu_r / three + T::two() / three;
    if !(den.norm() >= T::lit(LOCAL_FIELD_POLE_TOLERANCE)) {
        return Err(Error::PermeabilityPole);
    }
    Ok((mu_r - T::one()) / den / density)
}

/// n = −√(εr·μr) on the principal root, so Re n ≤ 0 always.
pub fn refractive_index<T: Real>(eps_r: Cplx<T>, mu_r: Cplx<T>) -> Cplx<T> {
    -(eps_r * mu_r).sqrt()
}

/// |Re n| / |Im n|; +∞ when Im n is exactly zero.
pub fn figure_of_merit<T: Real>(n: Cplx<T>) -> T {
    if n.im == T::zero() {
        T::infinity()
    } else {
        n.re.abs() / n.im.abs()
    }
}

pub fn classify_point<T: Real>(resp: &MediumResponse<T>, fom_threshold: T) -> WindowLabel {
    let left_handed = resp.eps_r.re < T::zero() && resp.mu_r.re < T::zero();
    if !left_handed {
        WindowLabel::NotLeftHanded
    } else if resp.fom > fom_threshold {
        WindowLabel::LeftHandedLowLoss
    } else {
        WindowLabel::LeftHandedLossy
    }
}

/// Full response record from the two polarizabilities.
pub fn response_from_material<T: Real>(
    gamma_e: Cplx<T>,
    gamma_m: Cplx<T>,
    density: T,
) -> Result<MediumResponse<T>> {
    let chi_e = electric_susceptibility(gamma_e, density)?;
    let eps_r = chi_e + T::one();
    let mu_r = relative_permeability(gamma_m, density)?;
    let n_squared = eps_r * mu_r;
    let n = refractive_index(eps_r, mu_r);
    Ok(MediumResponse {
        gamma_e,
        gamma_m,
        chi_e,
        eps_r,
        mu_r,
        n,
        n_squared,
        fom: figure_of_merit(n),
    })
}

/// Coherences → polarizabilities → local-field corrected constants.
pub fn medium_response<T: Real>(
    coh: &Coherences<T>,
    omega_pe: T,
    k: &MediumConstants<T>,
) -> Result<MediumResponse<T>> {
    let gamma_e = electric_polarizability(coh.rho43, omega_pe, k)?;
    let gamma_m = magnetic_polarizability(coh.rho21, omega_pe, k)?;
    response_from_material(gamma_e, gamma_m, k.density)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cplx<f64> {
        Cplx::new(re, im)
    }

    #[test]
    fn electric_prefactor() {
        let k = MediumConstants::<f64>::reference();
        let g = electric_polarizability(c(1.0, 0.0), 5e5, &k).unwrap();
        // 2·(2.5e-29)² / (8.8542e-12 · 1.0546e-34 · 5e5)
        let by_hand = 2.0 * 6.25e-58 / (8.8542e-12 * 1.0546e-34 * 5e5);
        assert!((g.re - by_hand).abs() < 1e-4 * by_hand);
        assert!((g.re - 2.68e-18).abs() < 0.01e-18);
        assert_eq!(
            electric_polarizability(c(0.0, 0.0), 5e5, &k).unwrap(),
            c(0.0, 0.0)
        );
        let one = electric_polarizability(c(0.3, -0.2), 5e5, &k).unwrap();
        let two = electric_polarizability(c(0.6, -0.4), 5e5, &k).unwrap();
        assert!((two - one * 2.0).norm() <= 1e-15 * two.norm());
    }

    #[test]
    fn probe_must_be_on() {
        let k = MediumConstants::<f64>::reference();
        assert!(electric_polarizability(c(1.0, 0.0), 0.0, &k).is_err());
        assert!(magnetic_polarizability(c(1.0, 0.0), 0.0, &k).is_err());
    }

    #[test]
    fn magnetic_polarizability_units() {
        let k = MediumConstants::<f64>::reference();
        assert_eq!(
            magnetic_polarizability(c(0.0, 0.0), 5e5, &k).unwrap(),
            c(0.0, 0.0)
        );
        // μ0·μ12/Bp: H/m · A·m² / T = m³
        let g = magnetic_polarizability(c(1.0, 0.0), 5e5, &k).unwrap();
        let bp = 1.054_571_817e-34 * 5e5 / (2.997_924_58e8 * 2.5e-29);
        let expect = 2.0 * 1.256_637_062_12e-6 * 7.0e-23 / bp;
        assert!((g.re - expect).abs() < 1e-12 * expect);
        assert!((g.re * 5e24 - 1.25e5).abs() < 0.01e5);
    }

    #[test]
    fn susceptibility_cases() {
        assert_eq!(
            electric_susceptibility(c(0.0, 0.0), 5e24).unwrap(),
            c(0.0, 0.0)
        );
        let chi = electric_susceptibility(c(-6.0, 0.0), 1.0).unwrap();
        assert!((chi - c(-2.0, 0.0)).norm() < 1e-15);
        assert!((chi + 1.0 - c(-1.0, 0.0)).norm() < 1e-15);
        assert!(matches!(
            electric_susceptibility(c(3.0, 0.0), 1.0),
            Err(Error::LocalFieldCatastrophe {
                field: Field::Electric,
                ..
            })
        ));
    }

    #[test]
    fn permeability_cases() {
        assert_eq!(
            relative_permeability(c(0.0, 0.0), 5e24).unwrap(),
            c(1.0, 0.0)
        );
        let mu = relative_permeability(c(-6.0, 0.0), 1.0).unwrap();
        assert!((mu - c(-1.0, 0.0)).norm() < 1e-15);
        assert!(relative_permeability(c(3.0, 0.0), 1.0).is_err());
        let g = polarizability_from_permeability(c(-1.0, 0.0), 1.0).unwrap();
        assert!((g - c(-6.0, 0.0)).norm() < 1e-14);
        assert_eq!(
            polarizability_from_permeability(c(1.0, 0.0), 5e24).unwrap(),
            c(0.0, 0.0)
        );
        assert_eq!(
            polarizability_from_permeability(c(-2.0, 0.0), 1.0),
            Err(Error::PermeabilityPole)
        );
    }

    #[test]
    fn negative_branch() {
        assert_eq!(refractive_index(c(-1.0, 0.0), c(-1.0, 0.0)), c(-1.0, 0.0));
        assert_eq!(refractive_index(c(1.0, 0.0), c(1.0, 0.0)), c(-1.0, 0.0));
        // (1 − 0.1i)² = 0.99 − 0.2i exactly
        let n = refractive_index(c(-1.0, 0.1), c(-1.0, 0.1));
        assert!((n - c(-1.0, 0.1)).norm() < 1e-15, "{n}");
    }

    #[test]
    fn fom_cases() {
        assert!((figure_of_merit(c(-1.0, 0.1)) - 10.0).abs() < 1e-12);
        assert_eq!(figure_of_merit(c(-2.0, 0.0)), f64::INFINITY);
        assert_eq!(figure_of_merit(c(0.0, 0.5)), 0.0);
    }

    fn record(eps: Cplx<f64>, mu: Cplx<f64>) -> MediumResponse<f64> {
        let n = refractive_index(eps, mu);
        MediumResponse {
            gamma_e: c(0.0, 0.0),
            gamma_m: c(0.0, 0.0),
            chi_e: eps - 1.0,
            eps_r: eps,
            mu_r: mu,
            n,
            n_squared: eps * mu,
            fom: figure_of_merit(n),
        }
    }

    #[test]
    fn classification() {
        let low = record(c(-2.0, 0.001), c(-2.0, 0.001));
        assert!(low.fom > 100.0);
        assert_eq!(classify_point(&low, 100.0), WindowLabel::LeftHandedLowLoss);
        let not = record(c(-2.0, 0.0), c(1.0, 0.0));
        assert_eq!(classify_point(&not, 100.0), WindowLabel::NotLeftHanded);
        let lossy = record(c(-1.0, 0.5), c(-1.0, 0.5));
        assert!((lossy.fom - 2.0).abs() < 1e-12);
        assert_eq!(classify_point(&lossy, 100.0), WindowLabel::LeftHandedLossy);
    }

    #[test]
    fn record_pipeline_keeps_eps_identity() {
        let r = response_from_material(c(1e-24, 3e-25), c(-2e-24, 1e-25), 5e24).unwrap();
        assert_eq!(r.eps_r, r.chi_e + 1.0);
        assert_eq!(r.n_squared, r.eps_r * r.mu_r);
    }
}
