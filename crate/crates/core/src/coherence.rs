//! First-order steady-state coherences ρ43 and ρ21 in closed form.

use num_complex::Complex;

use crate::coefficients::{coefficients_for, ClosedForm, CoefficientSet};
use crate::drive::DriveConfig;
use crate::error::{Error, PolePoint, Result};
use crate::rates::{CoherenceDampings, DecayRates};
use crate::scalar::{i_unit, Cplx, Real};

/// Relative size below which the common denominator counts as a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Probe-linear coherences (dimensionless).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coherences<T> {
    pub rho43: Cplx<T>,
    pub rho21: Cplx<T>,
}

impl<T: Real> Coherences<T> {
    pub fn zero() -> Self {
        Self {
            rho43: Complex::new(T::zero(), T::zero()),
            rho21: Complex::new(T::zero(), T::zero()),
        }
    }
}

fn pole_point<T: Real>(drive: &DriveConfig<T>) -> PolePoint {
    let f = |x: T| x.to_f64().unwrap_or(f64::NAN);
    PolePoint {
        omega_pe: f(drive.omega_pe),
        omega_pm: f(drive.omega_pm),
        omega_c: f(drive.omega_c),
        omega_s: f(drive.omega_s),
        delta_p: f(drive.delta_p),
        delta_c: f(drive.delta_c),
        delta_m: f(drive.delta_m),
        theta: f(drive.theta),
    }
}

/// D0·D1 + D2·Ωs² + Ωs⁴, rejected when it is below [`POLE_TOLERANCE`] of its
/// largest term.
fn denominator<T: Real>(c: &CoefficientSet<T>, drive: &DriveConfig<T>) -> Result<Cplx<T>> {
    let os2 = drive.omega_s * drive.omega_s;
    let d0d1 = c.d0 * c.d1;
    let den = d0d1 + c.d2 * os2 + os2 * os2;
    let scale = d0d1.norm().max(c.d2.norm() * os2).max(os2 * os2);
    if !(den.norm() > T::lit(POLE_TOLERANCE) * scale) {
        return Err(Error::CoherencePole {
            point: pole_point(drive),
        });
    }
    Ok(den)
}

fn rho43_from<T: Real>(
    c: &CoefficientSet<T>,
    den: Cplx<T>,
    dampings: &CoherenceDampings<T>,
    drive: &DriveConfig<T>,
    rates: &DecayRates<T>,
) -> Cplx<T> {
    let i = i_unit::<T>();
    let oc = drive.omega_c;
    let os = drive.omega_s;
    let oc2 = oc * oc;
    let os2 = os * os;
    let g31 = rates.gamma31;
    let direct = c.a0 * (c.a11 * c.a12 + c.a13) * (oc2 * drive.omega_pe);
    let lead = Complex::new(dampings.g2, T::zero()) + i * drive.delta_c;
    let cross = c.a0
        * (c.a21 - lead * (c.a22 - c.a23 * oc2 - g31 * os2))
        * (drive.omega_pm * oc * os)
        * Complex::from_polar(T::one(), drive.theta);
    (direct + cross) / den
}

fn rho21_from<T: Real>(
    form: ClosedForm,
    c: &CoefficientSet<T>,
    den: Cplx<T>,
    dampings: &CoherenceDampings<T>,
    drive: &DriveConfig<T>,
    rates: &DecayRates<T>,
) -> Cplx<T> {
    let i = i_unit::<T>();
    let CoherenceDampings { g2, g5, g6, .. } = *dampings;
    let (oc, os) = (drive.omega_c, drive.omega_s);
    let oc2 = oc * oc;
    let os2 = os * os;
    let g31 = rates.gamma31;
    let dc = drive.delta_c;
    let dp = drive.delta_p;
    let d32 = form.two_three_detuning(drive);

    let plus = Complex::new(g2, dc); // Γ2 + iΔc
    let minus = Complex::new(-g2, dc); // iΔc − Γ2
    let loop_term = c.a0
        * (c.a41 * plus * oc2
            + minus * ((c.a43 * (i * g6 + (dc - d32))) - c.a42 * oc2 + g31 * os2))
        * (drive.omega_pe * oc * os)
        * form.rho21_loop_phase(drive.theta);
    let ladder = Complex::new(g5, dp) * c.a32 + oc2; // (Γ5 + iΔp)·A32 + Ωc²
    let direct = c.a0 * c.a31 * minus * (c.a33 * ladder + c.a32 * os2) * drive.omega_pm;
    let dressed =
        c.a0 * plus * ((-c.a33 + g31) * ladder - (c.a32 + g31) * os2) * (drive.omega_pm * oc2);
    (loop_term + direct - dressed) / den
}

/// Both coherences from one coefficient evaluation.
pub fn coherences<T: Real>(
    form: ClosedForm,
    dampings: &CoherenceDampings<T>,
    drive: &DriveConfig<T>,
    rates: &DecayRates<T>,
) -> Result<Coherences<T>> {
    let c = coefficients_for(form, dampings, drive, rates)?;
    let den = denominator(&c, drive)?;
    Ok(Coherences {
        rho43: rho43_from(&c, den, dampings, drive, rates),
        rho21: rho21_from(form, &c, den, dampings, drive, rates),
    })
}

/// Published ρ43 (electric-dipole coherence).
pub fn rho43<T: Real>(
    dampings: &CoherenceDampings<T>,
    drive: &DriveConfig<T>,
    rates: &DecayRates<T>,
) -> Result<Cplx<T>> {
    coherences(ClosedForm::Printed, dampings, drive, rates).map(|c| c.rho43)
}

/// Published ρ21 (magnetic-dipole coherence).
pub fn rho21<T: Real>(
    dampings: &CoherenceDampings<T>,
    drive: &DriveConfig<T>,
    rates: &DecayRates<T>,
) -> Result<Cplx<T>> {
    coherences(ClosedForm::Printed, dampings, drive, rates).map(|c| c.rho21)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rates::derive_dampings;

    const GAMMA: f64 = 1e7;

    fn setup(
        omega_s: f64,
        delta_p: f64,
    ) -> (CoherenceDampings<f64>, DriveConfig<f64>, DecayRates<f64>) {
        let rates = DecayRates::reference(GAMMA);
        let damp = derive_dampings(&rates).unwrap();
        let drive = DriveConfig::reference(GAMMA, omega_s * GAMMA, delta_p * GAMMA, 2.5e-29, 7e-23)
            .unwrap();
        (damp, drive, rates)
    }

    #[test]
    fn control_off_kills_rho43() {
        let (damp, mut drive, rates) = setup(14.0, 2.0);
        drive.omega_c = 0.0;
        for form in [ClosedForm::Printed, ClosedForm::Corrected] {
            let c = coherences(form, &damp, &drive, &rates).unwrap();
            assert_eq!(c.rho43, Complex::new(0.0, 0.0));
        }
    }

    #[test]
    fn probe_off_is_zero() {
        let (damp, drive, rates) = setup(14.0, 2.0);
        let off = drive.scale_probe(0.0);
        assert_eq!(rho43(&damp, &off, &rates).unwrap().norm(), 0.0);
        assert_eq!(rho21(&damp, &off, &rates).unwrap().norm(), 0.0);
    }

    #[test]
    fn two_level_magnetic_response() {
        // γ21 = 0 and γc = 0.8γ make Γ1 exactly 0.8γ
        let rates = DecayRates {
            gamma21: 0.0,
            ..DecayRates::reference(GAMMA)
        };
        let damp = derive_dampings(&rates).unwrap();
        assert_eq!(damp.g1, 0.8 * GAMMA);
        let drive = DriveConfig {
            omega_pe: 0.05 * GAMMA,
            omega_pm: 0.001 * GAMMA,
            omega_c: 0.0,
            omega_s: 0.0,
            delta_p: 1.7 * GAMMA,
            delta_c: 0.005 * GAMMA,
            delta_s: 0.0,
            delta_m: 0.0,
            theta: 0.3,
        };
        for form in [ClosedForm::Printed, ClosedForm::Corrected] {
            let r = coherences(form, &damp, &drive, &rates).unwrap().rho21;
            assert!(r.re.abs() < 1e-18, "{r}");
            assert!((r.im - 1.25e-3).abs() < 1e-15, "{r}");
        }
    }

    #[test]
    fn pole_is_reported_with_parameter_point() {
        // Γ1 = 0 and Δm = Ωc = Ωs = 0 make D0 and the whole denominator vanish
        let rates = DecayRates {
            gamma31: 1.0,
            ..DecayRates::zero(1.0)
        };
        let damp = derive_dampings(&rates).unwrap();
        let drive = DriveConfig {
            omega_pe: 0.01,
            omega_pm: 0.0,
            omega_c: 0.0,
            omega_s: 0.0,
            delta_p: 0.0,
            delta_c: 0.0,
            delta_s: 0.0,
            delta_m: 0.0,
            theta: 0.0,
        };
        let err = coherences(ClosedForm::Printed, &damp, &drive, &rates).unwrap_err();
        match err {
            Error::CoherencePole { point } => {
                assert_eq!(point.omega_pe, 0.01);
                assert!(point.to_string().contains("Δp=0"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn printed_and_corrected_match_on_ladder_limit_only_with_fixed_a11() {
        // Ωs = 0, Ωpm = 0: ρ43 reduces to A0·Ωc²·Ωpe·A11/D1. The two forms
        // differ exactly by the Γ1 ↔ Γ2 swap in A11.
        let (damp, mut drive, rates) = setup(0.0, 0.8);
        drive.omega_pm = 0.0;
        let p = coherences(ClosedForm::Printed, &damp, &drive, &rates)
            .unwrap()
            .rho43;
        let c = coherences(ClosedForm::Corrected, &damp, &drive, &rates)
            .unwrap()
            .rho43;
        let k = coefficients_for(ClosedForm::Printed, &damp, &drive, &rates).unwrap();
        let a32 = k.a32;
        let shift =
            k.a0 * a32 * (2.0 * (damp.g2 - damp.g1)) * drive.omega_c.powi(2) * drive.omega_pe
                / k.d1;
        assert!((c - p - shift).norm() < 1e-12 * c.norm());
    }

    #[test]
    fn single_precision_evaluates() {
        let rates = DecayRates::<f32>::reference(1.0);
        let damp = derive_dampings(&rates).unwrap();
        let drive = DriveConfig::<f32>::reference(1.0, 14.0, 2.0, 2.5e-29, 7e-23).unwrap();
        let lo = coherences(ClosedForm::Corrected, &damp, &drive, &rates).unwrap();
        let (d64, dr64, r64) = setup(14.0, 2.0);
        let hi = coherences(ClosedForm::Corrected, &d64, &dr64, &r64).unwrap();
        let rel = ((lo.rho43.re as f64 - hi.rho43.re).powi(2)
            + (lo.rho43.im as f64 - hi.rho43.im).powi(2))
        .sqrt()
            / hi.rho43.norm();
        assert!(rel < 1e-4, "{rel}");
    }
}
