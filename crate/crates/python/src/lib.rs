//! Python bindings: load or build scenarios, evaluate analytic rates, run
//! the simulator, sweep and validate. Heavy work runs with the interpreter
//! released.

use std::path::PathBuf;

use mmwave_secrecy::report::{Method, RateReport};
use mmwave_secrecy::runner::{self, McSettings, ValidationReport};
use mmwave_secrecy::scenario::{self, Scale, ScenarioFile, SweepSpec, SweepVar};
use mmwave_secrecy::{config::SystemConfig, montecarlo, Error};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Numerical { .. } => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A validated system configuration with an optional default sweep.
#[pyclass(name = "Scenario", module = "mmsecrecy", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyScenario {
    inner: scenario::Scenario,
}

impl PyScenario {
    fn config(&self) -> &SystemConfig {
        &self.inner.config
    }
}

#[pymethods]
impl PyScenario {
    /// Parse a TOML scenario.
    #[staticmethod]
    fn from_toml(text: &str) -> PyResult<Self> {
        scenario::parse_scenario(text)
            .map(|inner| Self { inner })
            .map_err(to_py)
    }

    /// Read a TOML scenario file.
    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        scenario::load_scenario(&path)
            .map(|inner| Self { inner })
            .map_err(to_py)
    }

    /// The built-in scenario for figure `figure` (1 to 8).
    #[staticmethod]
    fn preset(figure: u8) -> PyResult<Self> {
        let p = scenario::preset(figure).map_err(to_py)?;
        p.file().resolve().map(|inner| Self { inner }).map_err(to_py)
    }

    fn to_toml(&self) -> PyResult<String> {
        let mut file = ScenarioFile::from_config(self.config());
        file.sweep = self.inner.sweep.clone();
        file.to_toml().map_err(to_py)
    }

    /// Copy with one sweep variable set, in the sweep's units
    /// (dBm, per km², m, GHz, or a count).
    fn with_value(&self, var: &str, value: f64) -> PyResult<Self> {
        let var = SweepVar::parse(var).map_err(to_py)?;
        let config = var.apply(self.config(), value).map_err(to_py)?;
        Ok(Self {
            inner: scenario::Scenario {
                config,
                ..self.inner.clone()
            },
        })
    }

    /// Hz.
    #[getter]
    fn carrier_frequency(&self) -> f64 {
        self.config().carrier_frequency
    }

    /// W.
    #[getter]
    fn tx_power(&self) -> f64 {
        self.config().tx_power
    }

    /// Per m².
    #[getter]
    fn tx_density(&self) -> f64 {
        self.config().tx_density
    }

    /// Per m².
    #[getter]
    fn eve_density(&self) -> f64 {
        self.config().eve_density
    }

    /// m.
    #[getter]
    fn dipole_distance(&self) -> f64 {
        self.config().dipole_distance
    }

    /// W.
    #[getter]
    fn noise_rx(&self) -> f64 {
        self.config().noise_rx
    }

    /// W.
    #[getter]
    fn noise_eve(&self) -> f64 {
        self.config().noise_eve
    }

    /// Analytic methods the `validate` call compares for this scenario.
    fn applicable_methods(&self) -> Vec<String> {
        runner::applicable_methods(self.config())
            .into_iter()
            .map(|m| m.to_string())
            .collect()
    }

    fn __repr__(&self) -> String {
        let c = self.config();
        format!(
            "Scenario(f_c={} GHz, P={} W, tx_density={}/m², eve_density={}/m², r={} m)",
            c.carrier_frequency / 1e9,
            c.tx_power,
            c.tx_density,
            c.eve_density,
            c.dipole_distance
        )
    }
}

/// Average rates in bits/s/Hz; simulated reports also carry 95% intervals.
#[pyclass(name = "RateReport", module = "mmsecrecy", frozen, get_all)]
struct PyRateReport {
    method: String,
    rate_typical: f64,
    rate_eve: f64,
    rate_secrecy: f64,
    /// `(low, high)` of the secrecy rate, or `None` for analytic reports.
    secrecy_ci: Option<(f64, f64)>,
    typical_ci: Option<(f64, f64)>,
    eve_ci: Option<(f64, f64)>,
    n_trials: Option<usize>,
}

impl From<RateReport> for PyRateReport {
    fn from(r: RateReport) -> Self {
        Self {
            method: r.method.to_string(),
            rate_typical: r.rate_typical,
            rate_eve: r.rate_eve,
            rate_secrecy: r.rate_secrecy,
            secrecy_ci: r.secrecy_ci(),
            typical_ci: r.mc.map(|m| m.typical.ci95()),
            eve_ci: r.mc.map(|m| m.eve.ci95()),
            n_trials: r.n_trials(),
        }
    }
}

#[pymethods]
impl PyRateReport {
    fn __repr__(&self) -> String {
        format!(
            "RateReport(method={}, typical={:.6}, eve={:.6}, secrecy={:.6})",
            self.method, self.rate_typical, self.rate_eve, self.rate_secrecy
        )
    }
}

/// One analytic-versus-simulation comparison.
#[pyclass(name = "ValidationRow", module = "mmsecrecy", frozen, get_all)]
struct PyValidationRow {
    method: String,
    quantity: String,
    check: String,
    analytic: f64,
    mc_mean: f64,
    mc_std_error: f64,
    passed: bool,
}

#[pyclass(name = "ValidationReport", module = "mmsecrecy", frozen, get_all)]
struct PyValidationReport {
    simulation: Py<PyRateReport>,
    rows: Vec<Py<PyValidationRow>>,
    passed: bool,
}

impl PyValidationReport {
    fn new(py: Python<'_>, report: ValidationReport) -> PyResult<Self> {
        let rows = report
            .rows
            .iter()
            .map(|r| {
                Py::new(
                    py,
                    PyValidationRow {
                        method: r.method.to_string(),
                        quantity: r.quantity.to_string(),
                        check: r.check.as_str().to_string(),
                        analytic: r.analytic,
                        mc_mean: r.mc_mean,
                        mc_std_error: r.mc_std_error,
                        passed: r.pass,
                    },
                )
            })
            .collect::<PyResult<_>>()?;
        Ok(Self {
            passed: report.passed(),
            simulation: Py::new(py, PyRateReport::from(report.mc))?,
            rows,
        })
    }
}

fn parse_method(method: &str) -> PyResult<Method> {
    method.parse().map_err(to_py)
}

/// Evaluate one analytic method (`exact`, `lower`, `losball`, `ula`,
/// `an-exact`, `an-lower`).
#[pyfunction]
#[pyo3(signature = (scenario, method = "exact"))]
fn evaluate(py: Python<'_>, scenario: &PyScenario, method: &str) -> PyResult<PyRateReport> {
    let method = parse_method(method)?;
    let cfg = scenario.config().clone();
    py.detach(move || runner::run_eval(&cfg, method, &runner::default_spec()))
        .map(PyRateReport::from)
        .map_err(to_py)
}

/// Monte Carlo estimate; the result depends only on `seed` and `trials`.
#[pyfunction]
#[pyo3(signature = (scenario, trials = 20_000, seed = 1, window_radius = None))]
fn simulate(
    py: Python<'_>,
    scenario: &PyScenario,
    trials: usize,
    seed: u64,
    window_radius: Option<f64>,
) -> PyResult<PyRateReport> {
    let cfg = scenario.config().clone();
    py.detach(move || montecarlo::estimate_rates(&cfg, trials, seed, window_radius))
        .map(PyRateReport::from)
        .map_err(to_py)
}

/// Sweep `var` over `steps` points of `[start, stop]`. Returns
/// `(value, method, report_or_error_message)` tuples ordered by value, then
/// by method.
#[pyfunction]
#[pyo3(signature = (scenario, var, start, stop, steps, methods, log = false, trials = 20_000, seed = 1))]
#[allow(clippy::too_many_arguments)]
fn sweep(
    py: Python<'_>,
    scenario: &PyScenario,
    var: &str,
    start: f64,
    stop: f64,
    steps: usize,
    methods: Vec<String>,
    log: bool,
    trials: usize,
    seed: u64,
) -> PyResult<Vec<(f64, String, Py<PyAny>)>> {
    let spec = SweepSpec {
        var: SweepVar::parse(var).map_err(to_py)?,
        from: start,
        to: stop,
        steps,
        scale: if log { Scale::Log } else { Scale::Linear },
        methods: vec![],
    };
    let methods = methods.iter().map(|m| parse_method(m)).collect::<PyResult<Vec<_>>>()?;
    let mc = McSettings {
        n_trials: trials,
        seed,
        window_radius: None,
    };
    let cfg = scenario.config().clone();
    let rows = py
        .detach(move || runner::run_sweep(&cfg, &spec, &methods, Some(mc), &runner::default_spec()))
        .map_err(to_py)?;
    rows.into_iter()
        .map(|row| {
            let cell = match row.outcome {
                Ok(r) => Py::new(py, PyRateReport::from(r))?.into_any(),
                Err(msg) => msg.into_pyobject(py)?.into_any().unbind(),
            };
            Ok((row.value, row.method.to_string(), cell))
        })
        .collect()
}

/// Compare every applicable analytic method against one simulation.
#[pyfunction]
#[pyo3(signature = (scenario, trials = 20_000, tolerance = 0.05, seed = 1, window_radius = None))]
fn validate(
    py: Python<'_>,
    scenario: &PyScenario,
    trials: usize,
    tolerance: f64,
    seed: u64,
    window_radius: Option<f64>,
) -> PyResult<PyValidationReport> {
    let cfg = scenario.config().clone();
    let mc = McSettings {
        n_trials: trials,
        seed,
        window_radius,
    };
    let report = py
        .detach(move || runner::run_validate(&cfg, mc, tolerance, &runner::default_spec(), None))
        .map_err(to_py)?;
    PyValidationReport::new(py, report)
}

#[pymodule]
fn mmsecrecy(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScenario>()?;
    m.add_class::<PyRateReport>()?;
    m.add_class::<PyValidationRow>()?;
    m.add_class::<PyValidationReport>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    Ok(())
}
