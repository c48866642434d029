use std::fmt;

use thiserror::Error;

/// Parameter point attached to a closed-form pole, in absolute units (s⁻¹).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolePoint {
    pub omega_pe: f64,
    pub omega_pm: f64,
    pub omega_c: f64,
    pub omega_s: f64,
    pub delta_p: f64,
    pub delta_c: f64,
    pub delta_m: f64,
    pub theta: f64,
}

impl fmt::Display for PolePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Ωpe={} Ωpm={} Ωc={} Ωs={} Δp={} Δc={} Δm={} θ={}",
            self.omega_pe,
            self.omega_pm,
            self.omega_c,
            self.omega_s,
            self.delta_p,
            self.delta_c,
            self.delta_m,
            self.theta
        )
    }
}

/// Which Clausius–Mossotti relation hit its pole.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Electric,
    Magnetic,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Electric => f.write_str("electric"),
            Field::Magnetic => f.write_str("magnetic"),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("rate `{name}` must be non-negative and finite, got {value}")]
    InvalidRate { name: &'static str, value: f64 },

    #[error("`{name}` must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("ground-state pumping denominator vanishes (γ31 = 0 and Γ2·Ωc² = 0)")]
    PumpingSingularity,

    #[error("closed-form denominator D0·D1 + D2·Ωs² + Ωs⁴ vanishes at {point}")]
    CoherencePole { point: PolePoint },

    #[error("{field} local-field catastrophe: N·γ = {re}{im:+}i is at the Clausius–Mossotti pole")]
    LocalFieldCatastrophe { field: Field, re: f64, im: f64 },

    #[error("inverse magnetic Clausius–Mossotti relation is singular at μr = −2")]
    PermeabilityPole,

    #[error("steady state is not unique (pivot {pivot:e} below threshold {threshold:e})")]
    DegenerateSteadyState { pivot: f64, threshold: f64 },

    #[error("loop-closed rotating frame is inconsistent: {0}")]
    InconsistentFrame(String),
}

pub type Result<T> = std::result::Result<T, Error>;
