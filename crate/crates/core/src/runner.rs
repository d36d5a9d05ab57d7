//! Evaluation, sweep and validation drivers behind the command-line tool.

use std::io::Write;

use rayon::prelude::*;

use crate::analytic::{
    avg_rate_eve_exact, avg_rate_eve_exact_an, avg_rate_eve_exact_losball, avg_rate_eve_exact_ula,
    avg_rate_typical_exact, avg_rate_typical_exact_an, avg_rate_typical_exact_losball, avg_rate_typical_lower,
    avg_rate_typical_lower_an, avg_rate_typical_lower_ula, secrecy_rate,
};
use crate::config::{AntennaModel, SystemConfig};
use crate::error::{Error, Result};
use crate::geometry::BlockageModel;
use crate::montecarlo::estimate_rates;
use crate::numerics::QuadratureSpec;
use crate::report::{Method, RateReport};
use crate::scenario::SweepSpec;

/// Quadrature tolerance used by the drivers.
pub fn default_spec() -> QuadratureSpec {
    QuadratureSpec::new(1e-8, 1e-13)
}

/// Evaluate one analytic method on `cfg`.
pub fn run_eval(cfg: &SystemConfig, method: Method, spec: &QuadratureSpec) -> Result<RateReport> {
    let (typical, eve) = match method {
        Method::Exact => (avg_rate_typical_exact(cfg, spec)?, avg_rate_eve_exact(cfg, spec)?),
        Method::Lower => (avg_rate_typical_lower(cfg)?, avg_rate_eve_exact(cfg, spec)?),
        Method::Losball => (
            avg_rate_typical_exact_losball(cfg, spec)?,
            avg_rate_eve_exact_losball(cfg, spec)?,
        ),
        Method::Ula => (
            avg_rate_typical_lower_ula(cfg, spec)?,
            avg_rate_eve_exact_ula(cfg, spec)?,
        ),
        Method::AnExact => (avg_rate_typical_exact_an(cfg, spec)?, avg_rate_eve_exact_an(cfg, spec)?),
        Method::AnLower => (avg_rate_typical_lower_an(cfg)?, avg_rate_eve_exact_an(cfg, spec)?),
        Method::MonteCarlo => {
            return Err(Error::NotApplicable {
                method: method.to_string(),
                reason: "Monte Carlo needs a trial count; use the simulator".into(),
            })
        }
    };
    Ok(RateReport {
        method,
        rate_typical: typical,
        rate_eve: eve,
        rate_secrecy: secrecy_rate(typical, eve),
        mc: None,
    })
}

/// Simulation settings for Monte Carlo rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McSettings {
    pub n_trials: usize,
    pub seed: u64,
    pub window_radius: Option<f64>,
}

pub const SWEEP_HEADER: [&str; 10] = [
    "sweep_var",
    "sweep_value",
    "method",
    "rate_typical_bps_hz",
    "rate_eve_bps_hz",
    "rate_secrecy_bps_hz",
    "ci_low",
    "ci_high",
    "n_trials",
    "error",
];

/// One `(value, method)` cell of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub method: Method,
    pub outcome: std::result::Result<RateReport, String>,
}

/// Evaluate every `(value, method)` pair; failures are kept per row.
/// Rows are ordered by sweep value, then by method as listed.
pub fn run_sweep(
    cfg: &SystemConfig,
    sweep: &SweepSpec,
    methods: &[Method],
    mc: Option<McSettings>,
    spec: &QuadratureSpec,
) -> Result<Vec<SweepRow>> {
    let values = sweep.values()?;
    if methods.is_empty() {
        return Err(Error::Config("sweep needs at least one method".into()));
    }
    if methods.contains(&Method::MonteCarlo) && mc.is_none() {
        return Err(Error::Config("method `mc` needs a trial count".into()));
    }
    let cells: Vec<(f64, Method)> = values
        .iter()
        .flat_map(|v| methods.iter().map(move |m| (*v, *m)))
        .collect();
    Ok(cells
        .into_par_iter()
        .map(|(value, method)| {
            let outcome = sweep.var.apply(cfg, value).and_then(|point| match (method, mc) {
                (Method::MonteCarlo, Some(s)) => estimate_rates(&point, s.n_trials, s.seed, s.window_radius),
                _ => run_eval(&point, method, spec),
            });
            SweepRow {
                value,
                method,
                outcome: outcome.map_err(|e| e.to_string()),
            }
        })
        .collect())
}

fn num(v: f64) -> String {
    v.to_string()
}

/// CSV with the fixed sweep header; numbers in shortest round-trip form.
pub fn write_sweep_csv<W: Write>(out: W, var: &str, rows: &[SweepRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Config(format!("writing CSV: {e}"));
    w.write_record(SWEEP_HEADER).map_err(io)?;
    for row in rows {
        let mut record = vec![var.to_string(), num(row.value), row.method.to_string()];
        match &row.outcome {
            Ok(r) => {
                let ci = r.secrecy_ci();
                record.extend([
                    num(r.rate_typical),
                    num(r.rate_eve),
                    num(r.rate_secrecy),
                    ci.map(|c| num(c.0)).unwrap_or_default(),
                    ci.map(|c| num(c.1)).unwrap_or_default(),
                    r.n_trials().map(|n| n.to_string()).unwrap_or_default(),
                    String::new(),
                ]);
            }
            Err(msg) => {
                record.extend(std::iter::repeat_n(String::new(), 6));
                record.push(msg.clone());
            }
        }
        w.write_record(&record).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Config(format!("writing CSV: {e}")))
}

/// How an analytic figure is compared with the simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// `|analytic − mc| ≤ max(tol·|mc|, 3·SE)`.
    Agreement,
    /// `analytic ≤ mc + max(tol·|mc|, 3·SE)`.
    LowerBound,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::Agreement => "agreement",
            Check::LowerBound => "lower-bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationRow {
    pub method: Method,
    /// `typical` or `eve`.
    pub quantity: &'static str,
    pub check: Check,
    pub analytic: f64,
    pub mc_mean: f64,
    pub mc_std_error: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub mc: RateReport,
    pub rows: Vec<ValidationRow>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Analytic methods that describe the same model as the simulator for `cfg`.
pub fn applicable_methods(cfg: &SystemConfig) -> Vec<Method> {
    if matches!(cfg.antenna, AntennaModel::Ula(_)) {
        return vec![Method::Ula];
    }
    if cfg.an.is_some() {
        return vec![Method::AnExact, Method::AnLower];
    }
    let mut methods = vec![Method::Exact, Method::Lower];
    if matches!(cfg.blockage, BlockageModel::LosBall { .. }) {
        methods.push(Method::Losball);
    }
    methods
}

pub fn passes(check: Check, analytic: f64, mean: f64, std_error: f64, tolerance: f64) -> bool {
    let slack = (tolerance * mean.abs()).max(3.0 * std_error);
    match check {
        Check::Agreement => (analytic - mean).abs() <= slack,
        Check::LowerBound => analytic <= mean + slack,
    }
}

/// Compare every applicable analytic evaluator against one simulation.
/// `analytic_cfg` replaces `cfg` on the analytic side only, which lets the
/// harness be checked against a deliberately wrong model.
pub fn run_validate(
    cfg: &SystemConfig,
    mc: McSettings,
    tolerance: f64,
    spec: &QuadratureSpec,
    analytic_cfg: Option<&SystemConfig>,
) -> Result<ValidationReport> {
    if mc.n_trials < 1000 {
        return Err(Error::invalid(
            "n_trials",
            format!("validation needs at least 1000, got {}", mc.n_trials),
        ));
    }
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(Error::invalid(
            "tolerance",
            format!("must be finite and >= 0, got {tolerance}"),
        ));
    }
    let sim = estimate_rates(cfg, mc.n_trials, mc.seed, mc.window_radius)?;
    let summary = sim.mc.expect("simulator reports carry trial statistics");
    let acfg = analytic_cfg.unwrap_or(cfg);
    let mut rows = Vec::new();
    for method in applicable_methods(cfg) {
        let report = run_eval(acfg, method, spec)?;
        let typical_check = if method.is_bound() {
            Check::LowerBound
        } else {
            Check::Agreement
        };
        for (quantity, check, analytic, est) in [
            ("typical", typical_check, report.rate_typical, summary.typical),
            ("eve", Check::Agreement, report.rate_eve, summary.eve),
        ] {
            rows.push(ValidationRow {
                method,
                quantity,
                check,
                analytic,
                mc_mean: est.mean,
                mc_std_error: est.std_error,
                pass: passes(check, analytic, est.mean, est.std_error, tolerance),
            });
        }
    }
    Ok(ValidationReport { mc: sim, rows })
}

pub const VALIDATE_HEADER: [&str; 10] = [
    "method",
    "quantity",
    "check",
    "analytic_bps_hz",
    "mc_mean_bps_hz",
    "mc_std_error",
    "ci_low",
    "ci_high",
    "n_trials",
    "pass",
];

pub fn write_validation_csv<W: Write>(out: W, report: &ValidationReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Config(format!("writing CSV: {e}"));
    w.write_record(VALIDATE_HEADER).map_err(io)?;
    let n = report.mc.n_trials().unwrap_or(0);
    for row in &report.rows {
        let h = crate::report::Z_95 * row.mc_std_error;
        w.write_record([
            row.method.to_string(),
            row.quantity.to_string(),
            row.check.as_str().to_string(),
            num(row.analytic),
            num(row.mc_mean),
            num(row.mc_std_error),
            num(row.mc_mean - h),
            num(row.mc_mean + h),
            n.to_string(),
            row.pass.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Config(format!("writing CSV: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{preset, Scale, SweepVar};

    fn mc(n_trials: usize) -> McSettings {
        McSettings {
            n_trials,
            seed: 17,
            window_radius: None,
        }
    }

    #[test]
    fn eval_dispatch_and_errors() {
        let cfg = preset(1).unwrap().config;
        let spec = default_spec();
        let exact = run_eval(&cfg, Method::Exact, &spec).unwrap();
        assert_eq!(exact.rate_secrecy, secrecy_rate(exact.rate_typical, exact.rate_eve));
        assert!(run_eval(&cfg, Method::Lower, &spec).unwrap().rate_typical <= exact.rate_typical);
        assert!(matches!(
            run_eval(&cfg, Method::Ula, &spec),
            Err(Error::NotApplicable { .. })
        ));
        assert!(run_eval(&cfg, Method::AnExact, &spec).is_err());
        assert!(run_eval(&cfg, Method::MonteCarlo, &spec).is_err());
    }

    #[test]
    fn sweep_rows_ordered_and_errors_inline() {
        let cfg = preset(1).unwrap().config;
        let sweep = SweepSpec {
            var: SweepVar::TxPowerDbm,
            from: 0.0,
            to: 30.0,
            steps: 2,
            scale: Scale::Linear,
            methods: vec![],
        };
        let methods = [Method::Exact, Method::AnExact];
        let rows = run_sweep(&cfg, &sweep, &methods, None, &default_spec()).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(
            rows.iter().map(|r| (r.value, r.method)).collect::<Vec<_>>(),
            vec![
                (0.0, Method::Exact),
                (0.0, Method::AnExact),
                (30.0, Method::Exact),
                (30.0, Method::AnExact)
            ]
        );
        assert!(rows[0].outcome.is_ok() && rows[1].outcome.is_err());
        let mut buf = Vec::new();
        write_sweep_csv(&mut buf, sweep.var.as_str(), &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), SWEEP_HEADER.join(","));
        assert_eq!(text.lines().count(), 5);
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(&first[..3], &["tx_power_dbm", "0", "exact"]);
        assert_eq!(&first[6..9], &["", "", ""]);
    }

    #[test]
    fn validate_passes_empty_network_and_catches_corrupted_beta() {
        let mut quiet = preset(1).unwrap().config;
        quiet.tx_density = 0.0;
        quiet.eve_density = 0.0;
        let report = run_validate(&quiet, mc(2000), 0.05, &default_spec(), None).unwrap();
        assert!(report.passed(), "{:?}", report.rows);

        let cfg = preset(1).unwrap().config;
        let mut corrupted = cfg.clone();
        corrupted.path_loss.beta *= 10.0;
        let bad = run_validate(&cfg, mc(2000), 0.05, &default_spec(), Some(&corrupted)).unwrap();
        assert!(!bad.passed());
        assert!(run_validate(&cfg, mc(500), 0.05, &default_spec(), None).is_err());
    }

    #[test]
    fn applicable_methods_follow_model() {
        assert_eq!(
            applicable_methods(&preset(1).unwrap().config),
            vec![Method::Exact, Method::Lower]
        );
        assert_eq!(applicable_methods(&preset(4).unwrap().config), vec![Method::Ula]);
        assert_eq!(
            applicable_methods(&preset(6).unwrap().config),
            vec![Method::AnExact, Method::AnLower]
        );
        let mut ball = preset(3).unwrap().config;
        ball.blockage = BlockageModel::LosBall { d_los: 200.0 };
        assert!(applicable_methods(&ball).contains(&Method::Losball));
    }
}
