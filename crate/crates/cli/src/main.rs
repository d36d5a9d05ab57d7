//! `mmsec`: evaluate, simulate, sweep and validate secrecy-rate scenarios.
//!
//! Exit status: 0 success, 1 validation failure, 2 configuration error,
//! 3 numerical failure.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mmwave_secrecy::montecarlo::estimate_rates;
use mmwave_secrecy::report::{Method, RateReport};
use mmwave_secrecy::runner::{
    default_spec, run_eval, run_sweep, run_validate, write_sweep_csv, write_validation_csv, McSettings, SweepRow,
};
use mmwave_secrecy::scenario::{load_scenario, preset, Scale, SweepSpec, SweepVar};
use mmwave_secrecy::Error;

#[derive(Parser, Debug)]
#[command(name = "mmsec", version, about = "Average secrecy rate of mmWave ad hoc networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one analytic method and print a CSV row.
    Eval {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = "exact")]
        method: String,
    },
    /// Monte Carlo estimate with a 95% interval on the secrecy rate.
    Sim {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 20_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Simulation disc radius in metres; defaults to max(10/sqrt(density), 2 km).
        #[arg(long)]
        window_radius: Option<f64>,
    },
    /// Sweep one variable; omitted options fall back to the file's [sweep] section.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        var: Option<String>,
        #[arg(long)]
        from: Option<f64>,
        #[arg(long)]
        to: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        /// Geometric spacing.
        #[arg(long)]
        log: bool,
        /// Comma-separated list, e.g. exact,lower,mc.
        #[arg(long, value_delimiter = ',')]
        methods: Vec<String>,
        #[arg(long)]
        out: PathBuf,
        /// Trials for `mc` rows.
        #[arg(long, default_value_t = 20_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Compare every applicable analytic method against a simulation.
    Validate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 20_000)]
        trials: usize,
        #[arg(long, default_value_t = 0.05)]
        tolerance: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        window_radius: Option<f64>,
        /// Also write the table here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print or write the scenario file for a standard figure.
    Preset {
        #[arg(long)]
        figure: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Validation,
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn single_row(report: RateReport) -> Vec<SweepRow> {
    vec![SweepRow {
        value: f64::NAN,
        method: report.method,
        outcome: Ok(report),
    }]
}

fn print_rows(rows: &[SweepRow]) -> Result<(), Failure> {
    let stdout = io::stdout();
    write_sweep_csv(stdout.lock(), "none", rows)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let spec = default_spec();
    match cli.command {
        Command::Eval { config, method } => {
            let cfg = load_scenario(&config)?.config;
            let method: Method = method.parse()?;
            print_rows(&single_row(run_eval(&cfg, method, &spec)?))
        }
        Command::Sim {
            config,
            trials,
            seed,
            window_radius,
        } => {
            let cfg = load_scenario(&config)?.config;
            print_rows(&single_row(estimate_rates(&cfg, trials, seed, window_radius)?))
        }
        Command::Sweep {
            config,
            var,
            from,
            to,
            steps,
            log,
            methods,
            out,
            trials,
            seed,
        } => {
            let scenario = load_scenario(&config)?;
            let base = scenario.sweep.clone();
            let missing = |name: &str| Error::Config(format!("--{name} not given and the config has no [sweep]"));
            let var = match var {
                Some(v) => SweepVar::parse(&v)?,
                None => base.as_ref().ok_or_else(|| missing("var"))?.var,
            };
            let pick = |given: Option<f64>, name: &str, field: fn(&SweepSpec) -> f64| -> Result<f64, Error> {
                match given {
                    Some(v) => Ok(v),
                    None => base.as_ref().map(field).ok_or_else(|| missing(name)),
                }
            };
            let sweep = SweepSpec {
                var,
                from: pick(from, "from", |s| s.from)?,
                to: pick(to, "to", |s| s.to)?,
                steps: match steps {
                    Some(s) => s,
                    None => base.as_ref().ok_or_else(|| missing("steps"))?.steps,
                },
                scale: if log {
                    Scale::Log
                } else {
                    base.as_ref().map(|s| s.scale).unwrap_or_default()
                },
                methods: vec![],
            };
            let methods: Vec<Method> = if methods.is_empty() {
                base.map(|s| s.methods).unwrap_or_default()
            } else {
                methods.iter().map(|m| m.parse()).collect::<Result<_, _>>()?
            };
            let mc = McSettings {
                n_trials: trials,
                seed,
                window_radius: None,
            };
            let rows = run_sweep(&scenario.config, &sweep, &methods, Some(mc), &spec)?;
            let mut w = create(&out)?;
            write_sweep_csv(&mut w, var.as_str(), &rows)?;
            w.flush()?;
            let failed = rows.iter().filter(|r| r.outcome.is_err()).count();
            if failed > 0 {
                eprintln!("{failed} of {} rows failed; see the error column", rows.len());
            }
            Ok(())
        }
        Command::Validate {
            config,
            trials,
            tolerance,
            seed,
            window_radius,
            out,
        } => {
            let cfg = load_scenario(&config)?.config;
            let mc = McSettings {
                n_trials: trials,
                seed,
                window_radius,
            };
            let report = run_validate(&cfg, mc, tolerance, &spec, None)?;
            write_validation_csv(io::stdout().lock(), &report)?;
            if let Some(path) = out {
                let mut w = create(&path)?;
                write_validation_csv(&mut w, &report)?;
                w.flush()?;
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Validation)
            }
        }
        Command::Preset { figure, out } => {
            let text = preset(figure)?.file().to_toml()?;
            match out {
                Some(path) => {
                    let mut w = create(&path)?;
                    w.write_all(text.as_bytes())?;
                    w.flush()?;
                }
                None => print!("{text}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation) => {
            eprintln!("validation failed");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Numerical { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
