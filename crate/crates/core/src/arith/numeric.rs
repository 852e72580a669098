//! Floating-point embedding and the exact/numeric policy.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type CNum = Complex64;

/// Zero and match thresholds for numeric checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps_zero: f64,
    pub eps_match: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_zero: 1e-9,
            eps_match: 1e-7,
        }
    }
}

impl Tolerance {
    /// Requires 0 < eps_zero <= eps_match < 1.
    pub fn new(eps_zero: f64, eps_match: f64) -> Result<Self> {
        if !(eps_zero > 0.0 && eps_zero <= eps_match && eps_match < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "tolerance must satisfy 0 < eps_zero <= eps_match < 1, got ({eps_zero}, {eps_match})"
            )));
        }
        Ok(Tolerance {
            eps_zero,
            eps_match,
        })
    }

    /// Sets `eps_zero`, raising `eps_match` if it would fall below it.
    pub fn with_zero(eps_zero: f64) -> Result<Self> {
        let eps_match = Tolerance::default().eps_match.max(eps_zero);
        Tolerance::new(eps_zero, eps_match)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
    #[default]
    Auto,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Mode::Exact),
            "numeric" => Ok(Mode::Numeric),
            "auto" => Ok(Mode::Auto),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
            Mode::Auto => "auto",
        })
    }
}

/// How zero tests are decided for one computation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Settings {
    pub mode: Mode,
    pub tol: Tolerance,
    pub parallel: bool,
}

impl Settings {
    pub fn exact() -> Self {
        Settings {
            mode: Mode::Exact,
            ..Settings::default()
        }
    }

    pub fn numeric() -> Self {
        Settings {
            mode: Mode::Numeric,
            ..Settings::default()
        }
    }
}

/// Outcome of a decision that may have been taken numerically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// Set when the answer came from the floating-point embedding.
    pub numeric: bool,
}

impl Verdict {
    pub fn exact(holds: bool) -> Self {
        Verdict {
            holds,
            numeric: false,
        }
    }

    pub fn numeric(holds: bool) -> Self {
        Verdict {
            holds,
            numeric: true,
        }
    }

    /// Conjunction; numeric if either side was.
    pub fn and(self, other: Verdict) -> Verdict {
        Verdict {
            holds: self.holds && other.holds,
            numeric: self.numeric || other.numeric,
        }
    }
}

pub fn is_finite(z: CNum) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tolerance_is_valid() {
        let t = Tolerance::default();
        assert!(Tolerance::new(t.eps_zero, t.eps_match).is_ok());
    }

    #[test]
    fn tolerance_ordering_enforced() {
        assert!(Tolerance::new(1e-6, 1e-9).is_err());
        assert!(Tolerance::new(0.0, 1e-9).is_err());
        assert!(Tolerance::new(1e-9, 1.0).is_err());
        assert_eq!(Tolerance::with_zero(1e-12).unwrap().eps_match, 1e-7);
        assert_eq!(Tolerance::with_zero(1e-5).unwrap().eps_match, 1e-5);
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("EXACT".parse::<Mode>().unwrap(), Mode::Exact);
        assert_eq!("numeric".parse::<Mode>().unwrap(), Mode::Numeric);
        assert!("fast".parse::<Mode>().is_err());
    }
}
