//! Flat key/value sweep configuration (TOML subset: no tables).
//!
//! Every key is optional; omitted keys take the reference values. Rates,
//! Rabi frequencies and detunings are in units of `gamma`, `theta` is in
//! radians, dipoles and density are SI.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use thiserror::Error;
use toml::Value;

use crate::drive::{probe_magnetic_rabi, DriveConfig};
use crate::optics::{MediumConstants, DEFAULT_FOM_THRESHOLD};
use crate::point::{CoherenceModel, ParameterPoint};
use crate::rates::{DampingOptions, DecayRates, MAGNETIC_DECAY_SUPPRESSION};

/// Every accepted key.
pub const KEYS: &[&str] = &[
    "gamma",
    "gamma43",
    "gamma42",
    "gamma31",
    "gamma21",
    "gamma1",
    "gamma_c",
    "gamma6_includes_dephasing",
    "d34",
    "mu12",
    "density",
    "omega_pe",
    "omega_pm",
    "omega_c",
    "delta_c",
    "delta_m",
    "delta_s",
    "theta",
    "delta_p_from",
    "delta_p_to",
    "delta_p_steps",
    "omega_s",
    "fom_threshold",
    "coherence_model",
    "csv_out",
    "plot_out",
    "verify_points",
    "verify_band",
];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown key `{key}` (did you mean `{suggestion}`?)")]
    UnknownKey { key: String, suggestion: String },
    #[error("key `{key}`: expected {expected}")]
    Type { key: String, expected: &'static str },
    #[error("invalid configuration: {}", .0.join("; "))]
    Invalid(Vec<String>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Rate unit γ (s⁻¹).
    pub gamma: f64,
    pub gamma43: f64,
    pub gamma42: f64,
    pub gamma31: f64,
    pub gamma21: f64,
    pub gamma1: f64,
    pub gamma_c: f64,
    pub gamma6_includes_dephasing: bool,
    pub medium: MediumConstants<f64>,
    pub omega_pe: f64,
    /// Explicit Ωpm/γ; `None` ties it to Ωpe through the shared beam.
    pub omega_pm: Option<f64>,
    pub omega_c: f64,
    pub delta_c: f64,
    pub delta_m: f64,
    /// Signal detuning /γ; `None` takes the loop-closed value Δc + Δp − Δm.
    pub delta_s: Option<f64>,
    pub theta: f64,
    pub delta_p_from: f64,
    pub delta_p_to: f64,
    pub delta_p_steps: usize,
    pub omega_s: Vec<f64>,
    pub fom_threshold: f64,
    pub model: CoherenceModel,
    pub csv_out: Option<PathBuf>,
    pub plot_out: Option<PathBuf>,
    pub verify_points: usize,
    pub verify_band: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            gamma: 1e7,
            gamma43: 0.8,
            gamma42: 1.5,
            gamma31: 1.2,
            gamma21: 0.8 * MAGNETIC_DECAY_SUPPRESSION,
            gamma1: 0.0,
            gamma_c: 0.8,
            gamma6_includes_dephasing: false,
            medium: MediumConstants::reference(),
            omega_pe: 0.05,
            omega_pm: None,
            omega_c: 8.0,
            delta_c: 0.005,
            delta_m: 0.005,
            delta_s: None,
            theta: PI / 6.0,
            delta_p_from: -30.0,
            delta_p_to: 30.0,
            delta_p_steps: 6001,
            omega_s: vec![14.0, 18.0, 20.0],
            fom_threshold: DEFAULT_FOM_THRESHOLD,
            model: CoherenceModel::Printed,
            csv_out: None,
            plot_out: None,
            verify_points: 61,
            verify_band: 1e-6,
        }
    }
}

fn number(key: &str, v: &Value) -> Result<f64, ConfigError> {
    match v {
        Value::Float(f) => Ok(*f),
        Value::Integer(i) => Ok(*i as f64),
        _ => Err(ConfigError::Type {
            key: key.to_string(),
            expected: "a number",
        }),
    }
}

fn count(key: &str, v: &Value) -> Result<usize, ConfigError> {
    match v {
        Value::Integer(i) if *i >= 0 => Ok(*i as usize),
        _ => Err(ConfigError::Type {
            key: key.to_string(),
            expected: "a non-negative integer",
        }),
    }
}

fn string<'a>(key: &str, v: &'a Value) -> Result<&'a str, ConfigError> {
    v.as_str().ok_or_else(|| ConfigError::Type {
        key: key.to_string(),
        expected: "a string",
    })
}

fn nearest_key(key: &str) -> String {
    KEYS.iter()
        .min_by_key(|k| strsim::levenshtein(key, k))
        .map(|k| k.to_string())
        .unwrap_or_default()
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

impl SweepConfig {
    /// Parses configuration text; omitted keys keep their defaults.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let table: toml::Table = toml::from_str(text).map_err(|e| ConfigError::Parse {
            line: e.span().map(|s| line_of(text, s.start)).unwrap_or(0),
            message: e.message().to_string(),
        })?;
        let mut cfg = Self::default();
        let mut gamma21_set = false;
        for (key, v) in &table {
            let k = key.as_str();
            match k {
                "gamma" => cfg.gamma = number(k, v)?,
                "gamma43" => cfg.gamma43 = number(k, v)?,
                "gamma42" => cfg.gamma42 = number(k, v)?,
                "gamma31" => cfg.gamma31 = number(k, v)?,
                "gamma21" => {
                    cfg.gamma21 = number(k, v)?;
                    gamma21_set = true;
                }
                "gamma1" => cfg.gamma1 = number(k, v)?,
                "gamma_c" => cfg.gamma_c = number(k, v)?,
                "gamma6_includes_dephasing" => {
                    cfg.gamma6_includes_dephasing = v.as_bool().ok_or(ConfigError::Type {
                        key: key.clone(),
                        expected: "a boolean",
                    })?
                }
                "d34" => cfg.medium.d34 = number(k, v)?,
                "mu12" => cfg.medium.mu12 = number(k, v)?,
                "density" => cfg.medium.density = number(k, v)?,
                "omega_pe" => cfg.omega_pe = number(k, v)?,
                "omega_pm" => cfg.omega_pm = Some(number(k, v)?),
                "omega_c" => cfg.omega_c = number(k, v)?,
                "delta_c" => cfg.delta_c = number(k, v)?,
                "delta_m" => cfg.delta_m = number(k, v)?,
                "delta_s" => cfg.delta_s = Some(number(k, v)?),
                "theta" => cfg.theta = number(k, v)?,
                "delta_p_from" => cfg.delta_p_from = number(k, v)?,
                "delta_p_to" => cfg.delta_p_to = number(k, v)?,
                "delta_p_steps" => cfg.delta_p_steps = count(k, v)?,
                "omega_s" => {
                    cfg.omega_s = match v {
                        Value::Array(items) => items
                            .iter()
                            .map(|x| number(k, x))
                            .collect::<Result<_, _>>()?,
                        other => vec![number(k, other)?],
                    }
                }
                "fom_threshold" => cfg.fom_threshold = number(k, v)?,
                "coherence_model" => {
                    cfg.model = string(k, v)?.parse().map_err(|_| ConfigError::Type {
                        key: key.clone(),
                        expected: "one of \"printed\", \"corrected\", \"master_equation\"",
                    })?
                }
                "csv_out" => cfg.csv_out = Some(PathBuf::from(string(k, v)?)),
                "plot_out" => cfg.plot_out = Some(PathBuf::from(string(k, v)?)),
                "verify_points" => cfg.verify_points = count(k, v)?,
                "verify_band" => cfg.verify_band = number(k, v)?,
                _ => {
                    return Err(ConfigError::UnknownKey {
                        key: key.clone(),
                        suggestion: nearest_key(k),
                    })
                }
            }
        }
        if !gamma21_set {
            cfg.gamma21 = cfg.gamma43 * MAGNETIC_DECAY_SUPPRESSION;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let mut problems = Vec::new();
        if self.delta_p_steps < 2 {
            problems.push(format!(
                "delta_p_steps must be at least 2, got {}",
                self.delta_p_steps
            ));
        }
        if !(self.delta_p_from < self.delta_p_to) {
            problems.push(format!(
                "delta_p_from ({}) must be below delta_p_to ({})",
                self.delta_p_from, self.delta_p_to
            ));
        }
        if self.omega_s.is_empty() {
            problems.push("omega_s overlay list is empty".to_string());
        }
        if self.omega_s.iter().any(|x| !(*x >= 0.0) || !x.is_finite()) {
            problems.push("omega_s values must be finite and non-negative".to_string());
        }
        if !(self.gamma > 0.0) || !self.gamma.is_finite() {
            problems.push(format!("gamma must be positive, got {}", self.gamma));
        }
        for (name, v) in [
            ("gamma43", self.gamma43),
            ("gamma42", self.gamma42),
            ("gamma31", self.gamma31),
            ("gamma21", self.gamma21),
            ("gamma1", self.gamma1),
            ("gamma_c", self.gamma_c),
            ("omega_c", self.omega_c),
            ("mu12", self.medium.mu12),
            ("fom_threshold", self.fom_threshold),
        ] {
            if !(v >= 0.0) || !v.is_finite() {
                problems.push(format!("{name} must be finite and non-negative, got {v}"));
            }
        }
        if let Some(pm) = self.omega_pm {
            if !(pm >= 0.0) || !pm.is_finite() {
                problems.push(format!(
                    "omega_pm must be finite and non-negative, got {pm}"
                ));
            }
        }
        for (name, v) in [
            ("omega_pe", self.omega_pe),
            ("d34", self.medium.d34),
            ("density", self.medium.density),
            ("verify_band", self.verify_band),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                problems.push(format!("{name} must be positive, got {v}"));
            }
        }
        if self.verify_points < 2 {
            problems.push(format!(
                "verify_points must be at least 2, got {}",
                self.verify_points
            ));
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(ConfigError::Invalid(problems))
        }
    }

    /// Absolute rates.
    pub fn rates(&self) -> DecayRates<f64> {
        let g = self.gamma;
        DecayRates {
            gamma_scale: g,
            gamma43: self.gamma43 * g,
            gamma42: self.gamma42 * g,
            gamma31: self.gamma31 * g,
            gamma21: self.gamma21 * g,
            gamma1: self.gamma1 * g,
            gamma_c: self.gamma_c * g,
        }
    }

    /// Parameter point at overlay `omega_s` and detuning `delta_p` (both /γ).
    pub fn point(&self, omega_s: f64, delta_p: f64) -> ParameterPoint<f64> {
        let g = self.gamma;
        let omega_pe = self.omega_pe * g;
        let omega_pm = match self.omega_pm {
            Some(pm) => pm * g,
            // validated: d34 > 0
            None => {
                probe_magnetic_rabi(omega_pe, self.medium.d34, self.medium.mu12).unwrap_or(f64::NAN)
            }
        };
        ParameterPoint {
            rates: self.rates(),
            drive: DriveConfig {
                omega_pe,
                omega_pm,
                omega_c: self.omega_c * g,
                omega_s: omega_s * g,
                delta_p: delta_p * g,
                delta_c: self.delta_c * g,
                delta_s: self
                    .delta_s
                    .map_or((self.delta_c + delta_p - self.delta_m) * g, |ds| ds * g),
                delta_m: self.delta_m * g,
                theta: self.theta,
            },
            damping: DampingOptions {
                gamma6_includes_dephasing: self.gamma6_includes_dephasing,
            },
        }
    }

    /// Evenly spaced Δp/γ values, endpoints included.
    pub fn delta_p_grid(&self) -> Vec<f64> {
        linspace(self.delta_p_from, self.delta_p_to, self.delta_p_steps)
    }
}

pub fn linspace(from: f64, to: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![from];
    }
    let span = to - from;
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|k| from + span * (k as f64) / last)
        .collect()
}

pub fn load_config(path: &Path) -> Result<SweepConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    SweepConfig::parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_is_reference_run() {
        let cfg = SweepConfig::parse("").unwrap();
        assert_eq!(cfg, SweepConfig::default());
        assert_eq!(cfg.gamma, 1e7);
        assert_eq!(cfg.medium.density, 5e24);
        assert_eq!(cfg.omega_pe, 0.05);
        assert_eq!(cfg.omega_c, 8.0);
        assert_eq!(cfg.delta_c, 0.005);
        assert_eq!(cfg.delta_m, 0.005);
        assert!((cfg.theta - PI / 6.0).abs() < 1e-15);
        assert_eq!(cfg.omega_s, vec![14.0, 18.0, 20.0]);
        let p = cfg.point(14.0, 0.0);
        let ratio = 7.0e-23 / (crate::constants::SPEED_OF_LIGHT * 2.5e-29);
        assert!((p.drive.omega_pm / p.drive.omega_pe - ratio).abs() < 1e-15);
    }

    #[test]
    fn comments_and_overrides() {
        let cfg = SweepConfig::parse(
            "# one overlay only\nomega_s = [14]\ndelta_p_steps = 11 # coarse\ncoherence_model = \"corrected\"\ngamma43 = 1\n",
        )
        .unwrap();
        assert_eq!(cfg.omega_s, vec![14.0]);
        assert_eq!(cfg.delta_p_steps, 11);
        assert_eq!(cfg.model, CoherenceModel::Corrected);
        assert_eq!(cfg.gamma21, MAGNETIC_DECAY_SUPPRESSION);
    }

    #[test]
    fn single_step_rejected() {
        match SweepConfig::parse("delta_p_steps = 1").unwrap_err() {
            ConfigError::Invalid(p) => assert!(p[0].contains("delta_p_steps")),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn unknown_key_names_nearest() {
        match SweepConfig::parse("omega_sig = 3").unwrap_err() {
            ConfigError::UnknownKey { key, suggestion } => {
                assert_eq!(key, "omega_sig");
                assert_eq!(suggestion, "omega_s");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn parse_error_has_line() {
        match SweepConfig::parse("gamma = 1e7\nomega_c = = 3\n").unwrap_err() {
            ConfigError::Parse { line, .. } => assert_eq!(line, 2),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn collects_all_violations() {
        match SweepConfig::parse("delta_p_from = 5\ndelta_p_to = 1\nomega_s = []").unwrap_err() {
            ConfigError::Invalid(p) => assert_eq!(p.len(), 2),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn grid_hits_zero_and_endpoints() {
        let g = SweepConfig::default().delta_p_grid();
        assert_eq!(g.len(), 6001);
        assert_eq!(g[0], -30.0);
        assert_eq!(g[3000], 0.0);
        assert_eq!(g[6000], 30.0);
    }
}
