//! Coefficient algebra of the first-order steady-state coherences.

use num_complex::Complex;

use crate::drive::DriveConfig;
use crate::error::{Error, Result};
use crate::rates::{CoherenceDampings, DecayRates};
use crate::scalar::{i_unit, re, Cplx, Real};

/// Which closed form to evaluate.
///
/// `Printed` reproduces the published expressions symbol for symbol.
/// `Corrected` is the exact linear response of the loop-closed four-level
/// master equation; it differs from `Printed` in three places:
///
/// * the ground-state term of A11 carries Γ2 instead of Γ1,
/// * the ρ32 coherence oscillates at Δm − Δc, not Δp − Δc (the two agree
///   only when Δm = Δp),
/// * the loop term of ρ21 carries e^{−iθ} instead of e^{+iθ}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum ClosedForm {
    #[default]
    Printed,
    Corrected,
}

impl ClosedForm {
    /// Detuning of the ρ32 coherence entering the coefficient list.
    pub(crate) fn two_three_detuning<T: Real>(self, drive: &DriveConfig<T>) -> T {
        match self {
            ClosedForm::Printed => drive.delta_p,
            ClosedForm::Corrected => drive.delta_m,
        }
    }

    /// Phase factor multiplying the loop (cross) term of ρ21.
    pub(crate) fn rho21_loop_phase<T: Real>(self, theta: T) -> Cplx<T> {
        match self {
            ClosedForm::Printed => Complex::from_polar(T::one(), theta),
            ClosedForm::Corrected => Complex::from_polar(T::one(), -theta),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSet<T> {
    pub a0: Cplx<T>,
    pub a11: Cplx<T>,
    pub a12: Cplx<T>,
    pub a13: Cplx<T>,
    pub a21: Cplx<T>,
    pub a22: Cplx<T>,
    pub a23: Cplx<T>,
    pub a31: Cplx<T>,
    pub a32: Cplx<T>,
    pub a33: Cplx<T>,
    pub a41: Cplx<T>,
    pub a42: Cplx<T>,
    pub a43: Cplx<T>,
    pub d0: Cplx<T>,
    pub d1: Cplx<T>,
    pub d2: Cplx<T>,
}

/// Coefficients exactly as published.
pub fn coefficients<T: Real>(
    dampings: &CoherenceDampings<T>,
    drive: &DriveConfig<T>,
    rates: &DecayRates<T>,
) -> Result<CoefficientSet<T>> {
    coefficients_for(ClosedForm::Printed, dampings, drive, rates)
}

pub fn coefficients_for<T: Real>(
    form: ClosedForm,
    dampings: &CoherenceDampings<T>,
    drive: &DriveConfig<T>,
    rates: &DecayRates<T>,
) -> Result<CoefficientSet<T>> {
    let i = i_unit::<T>();
    let two = T::two();
    let CoherenceDampings {
        g1, g2, g3, g5, g6, ..
    } = *dampings;
    let g31 = rates.gamma31;
    let (dp, dc, dm) = (drive.delta_p, drive.delta_c, drive.delta_m);
    let d32 = form.two_three_detuning(drive);
    let oc2 = drive.omega_c * drive.omega_c;
    let os2 = drive.omega_s * drive.omega_s;

    let pump = g2 * g2 * g31 + g31 * dc * dc + T::lit(4.0) * g2 * oc2;
    if pump == T::zero() {
        return Err(Error::PumpingSingularity);
    }
    let a0 = i / re(pump);

    let ground_term = match form {
        ClosedForm::Printed => g1,
        ClosedForm::Corrected => g2,
    };
    let a11 = (re(g2) - i * dc) * g31 + (re(g3) + i * (dc + dp)) * (two * ground_term);
    let a12 = (re(g1) + i * dm) * (re(g6) - i * (dc - d32)) + oc2;
    let a13 = (i * (g31 * dc) - (re(g31 - two * g6) + i * (two * dc - two * d32)) * g2) * os2;
    let a21 =
        (re(g2) - i * dc) * (re(g3 + g6) + i * (dp + d32)) * (re(g2 * g31 + oc2) + i * (g31 * dc));
    let a22 = (re(g1) + i * dm) * (re(-g3) - i * (dc + dp)) * g31;
    let a23 = re(g3 - g31 + g6) + i * (dp + d32);
    let a31 = re(-g2 * g31 - oc2) - i * (g31 * dc);
    let a32 = re(g3) + i * (dc + dp);
    let a33 = re(g6) + i * (d32 - dc);
    let a41 = re(g3 + g6) + i * (dp + d32);
    let a42 = re(g3 + g31) + i * (dc + dp);
    let a43 = (re(dp) - i * g5) * g31 + i * oc2;
    let d0 = (re(g1) + i * dm) * (re(g6) - i * (dc - d32)) + oc2;
    let d1 = (re(g5) + i * dp) * (re(g3) + i * (dc + dp)) + oc2;
    let d2 = (i * g6 + (dc - d32)) * (re(dp) - i * g5)
        + (re(g1) + i * dm) * (re(g3) + i * (dc + dp))
        - re(two * oc2);

    Ok(CoefficientSet {
        a0,
        a11,
        a12,
        a13,
        a21,
        a22,
        a23,
        a31,
        a32,
        a33,
        a41,
        a42,
        a43,
        d0,
        d1,
        d2,
    })
}
