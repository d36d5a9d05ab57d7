//! Result records shared by the analytic evaluators, the simulator and the CLI.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Two-sided 95% normal quantile used for every reported interval.
pub const Z_95: f64 = 1.959963984540054;

/// Which estimator produced a [`RateReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    Lower,
    Losball,
    Ula,
    AnExact,
    AnLower,
    MonteCarlo,
}

impl Method {
    pub const ANALYTIC: [Method; 6] = [
        Method::Exact,
        Method::Lower,
        Method::Losball,
        Method::Ula,
        Method::AnExact,
        Method::AnLower,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Lower => "lower",
            Method::Losball => "losball",
            Method::Ula => "ula",
            Method::AnExact => "an-exact",
            Method::AnLower => "an-lower",
            Method::MonteCarlo => "mc",
        }
    }

    /// True when the typical-link figure is a lower bound rather than the
    /// exact average.
    pub fn is_bound(self) -> bool {
        matches!(self, Method::Lower | Method::Ula | Method::AnLower)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ANALYTIC
            .into_iter()
            .chain([Method::MonteCarlo])
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown method `{s}` (expected exact, lower, losball, ula, an-exact, an-lower or mc)"
                ))
            })
    }
}

/// Sample mean of per-trial values with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub n_trials: usize,
}

impl TrialEstimate {
    /// Two-pass mean and standard error, summed in slice order.
    pub fn from_samples(samples: &[f64]) -> Self {
        let n = samples.len();
        if n == 0 {
            return TrialEstimate {
                mean: f64::NAN,
                std_error: f64::NAN,
                n_trials: 0,
            };
        }
        let mean = samples.iter().sum::<f64>() / n as f64;
        let std_error = if n > 1 {
            let ss: f64 = samples.iter().map(|v| (v - mean) * (v - mean)).sum();
            (ss / (n - 1) as f64 / n as f64).sqrt()
        } else {
            0.0
        };
        TrialEstimate {
            mean,
            std_error,
            n_trials: n,
        }
    }

    pub fn ci95(&self) -> (f64, f64) {
        let h = Z_95 * self.std_error;
        (self.mean - h, self.mean + h)
    }
}

/// Monte Carlo detail attached to a simulated report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McSummary {
    pub typical: TrialEstimate,
    pub eve: TrialEstimate,
    /// Per-trial difference `log₂(1+γ_o) − log₂(1+γ_e)` before clamping.
    pub difference: TrialEstimate,
    pub window_radius: f64,
    pub seed: u64,
}

/// Average rates in bits/s/Hz.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    pub method: Method,
    pub rate_typical: f64,
    pub rate_eve: f64,
    pub rate_secrecy: f64,
    pub mc: Option<McSummary>,
}

impl RateReport {
    /// 95% interval of the secrecy rate, clamped at zero like the estimate.
    pub fn secrecy_ci(&self) -> Option<(f64, f64)> {
        self.mc.map(|m| {
            let (lo, hi) = m.difference.ci95();
            (lo.max(0.0), hi.max(0.0))
        })
    }

    pub fn n_trials(&self) -> Option<usize> {
        self.mc.map(|m| m.typical.n_trials)
    }
}
