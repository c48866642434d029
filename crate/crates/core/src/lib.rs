//! Electromagnetic response of a dense four-level atomic vapor driven into
//! electromagnetically induced transparency.
//!
//! The probe's electric component drives the 3–4 transition and its
//! magnetic component the 1–2 transition, a two-photon control field
//! couples 1–3 and a signal field couples 2–4. The crate evaluates the
//! first-order steady-state coherences ρ43 and ρ21 in closed form
//! ([`coherence`]), checks them against the linear response of the
//! four-level master equation ([`oracle`]), and turns them into local-field
//! corrected permittivity, permeability, the negative-branch refractive
//! index and its figure of merit ([`optics`]). [`sweep`] drives detuning
//! scans and writes CSV/plot data.
//!
//! The physics is generic over the scalar ([`Real`]: `f32` or `f64`); the
//! `*64` aliases below fix it to `f64`.

// `!(x > 0)` is how NaN inputs get rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod coefficients;
pub mod coherence;
pub mod constants;
pub mod drive;
pub mod error;
pub mod optics;
pub mod oracle;
pub mod point;
pub mod rates;
pub mod scalar;
pub mod sweep;

pub use coefficients::{coefficients, coefficients_for, ClosedForm, CoefficientSet};
pub use coherence::{coherences, rho21, rho43, Coherences};
pub use drive::{probe_magnetic_rabi, DriveConfig};
pub use error::{Error, Result};
pub use optics::{
    classify_point, electric_polarizability, electric_susceptibility, figure_of_merit,
    magnetic_polarizability, medium_response, polarizability_from_permeability, refractive_index,
    relative_permeability, response_from_material, MediumConstants, MediumResponse, WindowLabel,
};
pub use point::{CoherenceModel, ParameterPoint};
pub use rates::{
    derive_dampings, derive_dampings_with, CoherenceDampings, DampingOptions, DecayRates,
};
pub use scalar::{Cplx, Real};

pub type DecayRates64 = DecayRates<f64>;
pub type CoherenceDampings64 = CoherenceDampings<f64>;
pub type DriveConfig64 = DriveConfig<f64>;
pub type CoefficientSet64 = CoefficientSet<f64>;
pub type Coherences64 = Coherences<f64>;
pub type MediumConstants64 = MediumConstants<f64>;
pub type MediumResponse64 = MediumResponse<f64>;
pub type ParameterPoint64 = ParameterPoint<f64>;
pub type LevelModel64 = oracle::LevelModel<f64>;
pub type DensityState64 = oracle::DensityState<f64>;
