//! Verification suites: every closed form is compared against an
//! independent oracle (finite differences, adaptive Runge–Kutta,
//! tanh-sinh quadrature) and summarised as a JSON-serialisable report.

mod ep;
mod flux;
mod regular;
mod spectrum;

use serde::Serialize;

use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ep,
    Flux,
    Regular,
    Spectrum,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Ep => "ep",
            Suite::Flux => "flux",
            Suite::Regular => "regular",
            Suite::Spectrum => "spectrum",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ep" => Ok(Suite::Ep),
            "flux" => Ok(Suite::Flux),
            "regular" => Ok(Suite::Regular),
            "spectrum" => Ok(Suite::Spectrum),
            "all" => Ok(Suite::All),
            _ => Err(crate::Error::InvalidParameter(format!("unknown suite '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct VerifyOptions {
    /// Replaces the tolerance of every residual-type check.
    pub tol: Option<f64>,
    /// Negative control: corrupt one input per suite so that it must fail.
    pub inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// `null` in JSON when the check could not be evaluated.
    pub max_residual: f64,
    pub tol: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// How a measured quantity is compared with its tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Bound {
    /// `value <= tol`; `--tol` replaces `tol`.
    Residual(f64),
    /// `value <= tol`, fixed.
    Fixed(f64),
}

pub(crate) struct Check {
    pub name: &'static str,
    pub bound: Bound,
    pub run: fn(&VerifyOptions) -> Result<f64>,
}

fn evaluate(check: &Check, opts: &VerifyOptions) -> CheckResult {
    let tol = match check.bound {
        Bound::Residual(t) => opts.tol.unwrap_or(t),
        Bound::Fixed(t) => t,
    };
    match (check.run)(opts) {
        Ok(v) => CheckResult { name: check.name.to_string(), max_residual: v, tol, pass: v <= tol, error: None },
        Err(e) => CheckResult {
            name: check.name.to_string(),
            max_residual: f64::INFINITY,
            tol,
            pass: false,
            error: Some(e.to_string()),
        },
    }
}

fn checks_of(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Ep => ep::checks(),
        Suite::Flux => flux::checks(),
        Suite::Regular => regular::checks(),
        Suite::Spectrum => spectrum::checks(),
        Suite::All => {
            [Suite::Ep, Suite::Flux, Suite::Regular, Suite::Spectrum].into_iter().flat_map(checks_of).collect()
        }
    }
}

/// Stable names of the checks a suite runs, in report order.
pub fn check_names(suite: Suite) -> Vec<&'static str> {
    checks_of(suite).iter().map(|c| c.name).collect()
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let checks: Vec<CheckResult> = checks_of(suite).iter().map(|c| evaluate(c, opts)).collect();
    let pass = checks.iter().all(|c| c.pass);
    VerifyReport { suite: suite.name().to_string(), checks, pass }
}

/// `max(a, b)` that lets a NaN through as infinity.
pub(crate) fn worst(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::INFINITY
    } else {
        a.max(b)
    }
}


#[cfg(test)]
mod suite_tests {
    use super::*;

    #[test]
    fn every_suite_passes_and_catches_its_fault() {
        for s in [Suite::Ep, Suite::Flux, Suite::Regular, Suite::Spectrum] {
            let good = run_suite(s, &VerifyOptions::default());
            assert!(good.pass, "{}", good.to_json());
            let bad = run_suite(s, &VerifyOptions { tol: None, inject_fault: true });
            assert!(!bad.pass, "{}", bad.to_json());
        }
    }
}
