//! Closed-form vs. master-equation discrepancy classification.

use std::fmt;

use crate::coherence::Coherences;
use crate::scalar::{rel_err, Real};

/// Below this relative error the two routes agree.
pub const AGREEMENT_THRESHOLD: f64 = 1e-8;
/// Above this relative error the closed form is structurally different.
pub const STRUCTURAL_THRESHOLD: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Agreement {
    Agree,
    ToleranceBand,
    Structural,
}

impl Agreement {
    pub fn classify<T: Real>(rel: T) -> Self {
        if rel < T::lit(AGREEMENT_THRESHOLD) {
            Agreement::Agree
        } else if rel <= T::lit(STRUCTURAL_THRESHOLD) {
            Agreement::ToleranceBand
        } else {
            Agreement::Structural
        }
    }
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Agree => "agree",
            Agreement::ToleranceBand => "tolerance-band",
            Agreement::Structural => "structural-mismatch",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discrepancy<T> {
    pub rho43: T,
    pub rho21: T,
}

impl<T: Real> Discrepancy<T> {
    pub fn worst(&self) -> T {
        self.rho43.max(self.rho21)
    }

    pub fn rho43_class(&self) -> Agreement {
        Agreement::classify(self.rho43)
    }

    pub fn rho21_class(&self) -> Agreement {
        Agreement::classify(self.rho21)
    }

    pub fn class(&self) -> Agreement {
        Agreement::classify(self.worst())
    }
}

/// Relative errors of `analytic` against `oracle`, per coherence.
pub fn compare<T: Real>(analytic: &Coherences<T>, oracle: &Coherences<T>) -> Discrepancy<T> {
    Discrepancy {
        rho43: rel_err(analytic.rho43, oracle.rho43),
        rho21: rel_err(analytic.rho21, oracle.rho21),
    }
}
