//! Versioned table of master-equation coherences keyed by parameter-point
//! hash.
//!
//! ```text
//! # comment lines start with '#'
//! version 1
//! <hash> <omega_s/γ> <delta_p/γ> <re ρ43> <im ρ43> <re ρ21> <im ρ21>
//! ```

use std::fmt::Write as _;

use num_complex::Complex;

use crate::coherence::Coherences;
use crate::error::Result;
use crate::point::{CoherenceModel, ParameterPoint};

pub const GOLDEN_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenEntry {
    pub hash: String,
    pub omega_s_over_gamma: f64,
    pub delta_p_over_gamma: f64,
    pub coherences: Coherences<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GoldenTable {
    pub entries: Vec<GoldenEntry>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GoldenParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing `version` line")]
    MissingVersion,
    #[error("unsupported golden version {0} (expected {GOLDEN_VERSION})")]
    Version(u32),
}

/// Reference points at Ωs ∈ {14, 18, 20}γ and Δp ∈ {−5, 0, 5}γ.
pub fn reference_points() -> Vec<ParameterPoint<f64>> {
    let mut out = Vec::new();
    for os in [14.0, 18.0, 20.0] {
        for dp in [-5.0, 0.0, 5.0] {
            out.push(ParameterPoint::reference(os, dp));
        }
    }
    out
}

impl GoldenTable {
    /// Evaluates the master-equation oracle at every point.
    pub fn generate(points: &[ParameterPoint<f64>]) -> Result<Self> {
        let entries = points
            .iter()
            .map(|p| {
                let g = p.rates.gamma_scale;
                Ok(GoldenEntry {
                    hash: p.hash(),
                    omega_s_over_gamma: p.drive.omega_s / g,
                    delta_p_over_gamma: p.drive.delta_p / g,
                    coherences: p.coherences(CoherenceModel::MasterEquation)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { entries })
    }

    pub fn lookup(&self, hash: &str) -> Option<&GoldenEntry> {
        self.entries.iter().find(|e| e.hash == hash)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str("# master-equation linear-response coherences\n");
        s.push_str("# regenerate with: eit-nri golden regen --out <path>\n");
        let _ = writeln!(s, "version {GOLDEN_VERSION}");
        s.push_str(
            "# hash omega_s_over_gamma delta_p_over_gamma re_rho43 im_rho43 re_rho21 im_rho21\n",
        );
        for e in &self.entries {
            let c = &e.coherences;
            let _ = writeln!(
                s,
                "{} {:?} {:?} {:?} {:?} {:?} {:?}",
                e.hash,
                e.omega_s_over_gamma,
                e.delta_p_over_gamma,
                c.rho43.re,
                c.rho43.im,
                c.rho21.re,
                c.rho21.im
            );
        }
        s
    }

    pub fn parse(text: &str) -> std::result::Result<Self, GoldenParseError> {
        let mut version = None;
        let mut entries = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = k + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |message: String| GoldenParseError::Malformed {
                line: lineno,
                message,
            };
            if let Some(v) = line.strip_prefix("version") {
                let v: u32 = v
                    .trim()
                    .parse()
                    .map_err(|_| malformed(format!("bad version `{}`", v.trim())))?;
                if v != GOLDEN_VERSION {
                    return Err(GoldenParseError::Version(v));
                }
                version = Some(v);
                continue;
            }
            if version.is_none() {
                return Err(GoldenParseError::MissingVersion);
            }
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() != 7 {
                return Err(malformed(format!(
                    "expected 7 columns, found {}",
                    cols.len()
                )));
            }
            let num = |i: usize| -> std::result::Result<f64, GoldenParseError> {
                cols[i]
                    .parse::<f64>()
                    .map_err(|_| malformed(format!("bad number `{}`", cols[i])))
            };
            entries.push(GoldenEntry {
                hash: cols[0].to_string(),
                omega_s_over_gamma: num(1)?,
                delta_p_over_gamma: num(2)?,
                coherences: Coherences {
                    rho43: Complex::new(num(3)?, num(4)?),
                    rho21: Complex::new(num(5)?, num(6)?),
                },
            });
        }
        if version.is_none() {
            return Err(GoldenParseError::MissingVersion);
        }
        Ok(Self { entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let t = GoldenTable::generate(&reference_points()[..2]).unwrap();
        let back = GoldenTable::parse(&t.to_text()).unwrap();
        assert_eq!(t, back);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            GoldenTable::parse("abc 1 2 3 4 5 6\n"),
            Err(GoldenParseError::MissingVersion)
        );
        assert_eq!(
            GoldenTable::parse("version 9\n"),
            Err(GoldenParseError::Version(9))
        );
        assert!(matches!(
            GoldenTable::parse("version 1\nabc 1 2\n"),
            Err(GoldenParseError::Malformed { line: 2, .. })
        ));
    }
}
