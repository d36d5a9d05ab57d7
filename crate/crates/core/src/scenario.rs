//! Scenario files, parameter sweeps and the built-in figure presets.
//!
//! A scenario is a TOML document. Quantities may be given in engineering
//! units (GHz, dBm, per km², dB, degrees) or in linear SI; exactly one form
//! per quantity. Unknown keys are rejected. [`ScenarioFile::from_config`]
//! writes the linear SI form, so emitting and re-loading a config is
//! lossless.

use std::f64::consts::PI;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::antenna::{upa_pattern, SectoredPattern, UlaConfig};
use crate::config::{AntennaModel, ArtificialNoise, SystemConfig};
use crate::error::{Error, Result};
use crate::geometry::{beta_from_frequency, BlockageModel, PathLossModel};
use crate::report::Method;
use crate::units::{db_to_linear, dbm_to_watts, noise_power_dbm, per_km2};

/// Mean LoS length `1/ρ` used by every preset, metres.
pub const MEAN_LOS_LENGTH: f64 = 141.4;
pub const BANDWIDTH_HZ: f64 = 2e9;
pub const NOISE_FIGURE_DB: f64 = 10.0;
/// LoS-ball radius used when a preset is re-run under the LoS-ball model.
pub const DEFAULT_D_LOS: f64 = 200.0;

/// Measured `(α_LoS, α_NLoS)` for the four standard carriers.
pub fn table_exponents(f_c: f64) -> Option<(f64, f64)> {
    const TABLE: [(f64, (f64, f64)); 4] = [
        (28e9, (2.0, 3.0)),
        (38e9, (2.0, 3.71)),
        (60e9, (2.25, 3.76)),
        (73e9, (2.0, 3.4)),
    ];
    TABLE.iter().find(|(f, _)| (f - f_c).abs() <= 1e-9 * f).map(|(_, e)| *e)
}

fn exactly_one<T>(name: &'static str, a: Option<T>, b: Option<T>) -> Result<T> {
    match (a, b) {
        (Some(v), None) | (None, Some(v)) => Ok(v),
        (None, None) => Err(Error::invalid(name, "missing")),
        (Some(_), Some(_)) => Err(Error::invalid(name, "given in two unit forms; keep one")),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathLossSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_los: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_nlos: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ref_distance_m: Option<f64>,
    /// Overrides the free-space constant derived from the carrier.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case", deny_unknown_fields)]
pub enum BlockageSection {
    Exponential {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mean_los_length_m: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rho_per_m: Option<f64>,
    },
    LosBall {
        d_los_m: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bandwidth_hz: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noise_figure_db: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rx_dbm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rx_w: Option<f64>,
    /// Defaults to the receiver noise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eve_dbm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eve_w: Option<f64>,
}

/// Sectored beam pattern, in dB/degrees or linear/radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub main_db: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side_db: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beamwidth_deg: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub main: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beamwidth_rad: Option<f64>,
}

impl PatternSpec {
    pub fn db(main_db: f64, side_db: f64, beamwidth_deg: f64) -> Self {
        PatternSpec {
            main_db: Some(main_db),
            side_db: Some(side_db),
            beamwidth_deg: Some(beamwidth_deg),
            main: None,
            side: None,
            beamwidth_rad: None,
        }
    }

    fn linear(p: &SectoredPattern) -> Self {
        PatternSpec {
            main_db: None,
            side_db: None,
            beamwidth_deg: None,
            main: Some(p.g_main),
            side: Some(p.g_side),
            beamwidth_rad: Some(p.beamwidth),
        }
    }

    pub fn resolve(&self) -> Result<SectoredPattern> {
        SectoredPattern::new(
            exactly_one("pattern.main", self.main_db.map(db_to_linear), self.main)?,
            exactly_one("pattern.side", self.side_db.map(db_to_linear), self.side)?,
            exactly_one(
                "pattern.beamwidth",
                self.beamwidth_deg.map(f64::to_radians),
                self.beamwidth_rad,
            )?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AntennaSection {
    Upa {
        n: u32,
    },
    Sectored {
        tx: PatternSpec,
        rx: PatternSpec,
    },
    Ula {
        n: u32,
        n_eve: u32,
        #[serde(default = "half")]
        spacing_ratio: f64,
        #[serde(default = "third_pi")]
        xi_ro_rad: f64,
        #[serde(default = "third_pi")]
        phi_to_rad: f64,
    },
}

fn half() -> f64 {
    0.5
}

fn third_pi() -> f64 {
    PI / 3.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case", deny_unknown_fields)]
pub enum EveAntennaSection {
    Upa {
        n: u32,
    },
    Sectored {
        #[serde(flatten)]
        pattern: PatternSpec,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnSection {
    pub mu: f64,
    pub signal: PatternSpec,
    pub noise: PatternSpec,
}

/// Quantity varied by a sweep. Values are in the units named by
/// [`SweepVar::unit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVar {
    TxPowerDbm,
    TxDensity,
    EveDensity,
    DipoleDistance,
    Mu,
    NAntennas,
    NEveAntennas,
    Frequency,
}

impl SweepVar {
    pub const ALL: [SweepVar; 8] = [
        SweepVar::TxPowerDbm,
        SweepVar::TxDensity,
        SweepVar::EveDensity,
        SweepVar::DipoleDistance,
        SweepVar::Mu,
        SweepVar::NAntennas,
        SweepVar::NEveAntennas,
        SweepVar::Frequency,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SweepVar::TxPowerDbm => "tx_power_dbm",
            SweepVar::TxDensity => "tx_density",
            SweepVar::EveDensity => "eve_density",
            SweepVar::DipoleDistance => "dipole_distance",
            SweepVar::Mu => "mu",
            SweepVar::NAntennas => "n_antennas",
            SweepVar::NEveAntennas => "n_eve_antennas",
            SweepVar::Frequency => "frequency",
        }
    }

    pub fn unit(self) -> &'static str {
        match self {
            SweepVar::TxPowerDbm => "dBm",
            SweepVar::TxDensity | SweepVar::EveDensity => "per km^2",
            SweepVar::DipoleDistance => "m",
            SweepVar::Mu | SweepVar::NAntennas | SweepVar::NEveAntennas => "1",
            SweepVar::Frequency => "GHz",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        SweepVar::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown sweep variable `{s}`")))
    }

    /// Copy of `cfg` with this variable set to `value`.
    ///
    /// Changing the frequency also resets `β`, and the path-loss exponents
    /// when the new carrier is one of the four measured bands.
    pub fn apply(self, cfg: &SystemConfig, value: f64) -> Result<SystemConfig> {
        let mut out = cfg.clone();
        let count = |name: &'static str| -> Result<u32> {
            let n = value.round();
            if !(1.0..=1e6).contains(&n) {
                return Err(Error::invalid(name, format!("array size {value} out of range")));
            }
            Ok(n as u32)
        };
        match self {
            SweepVar::TxPowerDbm => out.tx_power = dbm_to_watts(value),
            SweepVar::TxDensity => out.tx_density = per_km2(value),
            SweepVar::EveDensity => out.eve_density = per_km2(value),
            SweepVar::DipoleDistance => out.dipole_distance = value,
            SweepVar::Mu => {
                let mut an = out.artificial_noise()?;
                an.mu = value;
                out.an = Some(an);
            }
            SweepVar::NAntennas => {
                let n = count("n_antennas")?;
                match &mut out.antenna {
                    AntennaModel::Upa { n: m } => *m = n,
                    AntennaModel::Ula(u) => u.n_tx = n,
                    AntennaModel::Sectored { .. } => {
                        return Err(Error::invalid("n_antennas", "sectored antennas have no array size"))
                    }
                }
            }
            SweepVar::NEveAntennas => {
                let n = count("n_eve_antennas")?;
                match &mut out.antenna {
                    AntennaModel::Ula(u) => u.n_eve = n,
                    _ => out.eve_antenna = Some(upa_pattern(n)?),
                }
            }
            SweepVar::Frequency => {
                let f_c = value * 1e9;
                out.carrier_frequency = f_c;
                out.path_loss.beta = beta_from_frequency(f_c)?;
                if let Some((al, an)) = table_exponents(f_c) {
                    out.path_loss.alpha_los = al;
                    out.path_loss.alpha_nlos = an;
                }
            }
        }
        out.validate()?;
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub var: SweepVar,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    #[serde(default)]
    pub scale: Scale,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub methods: Vec<Method>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::invalid(
                "sweep.steps",
                format!("need at least 2, got {}", self.steps),
            ));
        }
        if !(self.from.is_finite() && self.to.is_finite()) || self.from == self.to {
            return Err(Error::invalid("sweep.from", "endpoints must be finite and distinct"));
        }
        if self.scale == Scale::Log && (self.from <= 0.0 || self.to <= 0.0) {
            return Err(Error::invalid("sweep.scale", "log sweep needs positive endpoints"));
        }
        Ok(())
    }

    /// Grid values, endpoints exact.
    pub fn values(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let last = (self.steps - 1) as f64;
        Ok((0..self.steps)
            .map(|i| {
                if i == 0 {
                    return self.from;
                }
                if i == self.steps - 1 {
                    return self.to;
                }
                let t = i as f64 / last;
                match self.scale {
                    Scale::Linear => self.from + (self.to - self.from) * t,
                    Scale::Log => (self.from.ln() + (self.to.ln() - self.from.ln()) * t).exp(),
                }
            })
            .collect())
    }
}

/// On-disk scenario document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier_frequency_ghz: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier_frequency_hz: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tx_power_dbm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tx_power_w: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tx_density_per_km2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tx_density_per_m2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eve_density_per_km2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eve_density_per_m2: Option<f64>,
    pub dipole_distance_m: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path_loss: Option<PathLossSection>,
    pub blockage: BlockageSection,
    pub noise: NoiseSection,
    pub antenna: AntennaSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eve_antenna: Option<EveAntennaSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub artificial_noise: Option<AnSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSpec>,
}

/// A resolved scenario: the system plus an optional default sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub config: SystemConfig,
    pub sweep: Option<SweepSpec>,
    pub notes: Option<String>,
}

impl ScenarioFile {
    pub fn resolve(&self) -> Result<Scenario> {
        let f_c = exactly_one(
            "carrier_frequency",
            self.carrier_frequency_ghz.map(|g| g * 1e9),
            self.carrier_frequency_hz,
        )?;
        let tx_power = exactly_one("tx_power", self.tx_power_dbm.map(dbm_to_watts), self.tx_power_w)?;
        let tx_density = exactly_one(
            "tx_density",
            self.tx_density_per_km2.map(per_km2),
            self.tx_density_per_m2,
        )?;
        let eve_density = exactly_one(
            "eve_density",
            self.eve_density_per_km2.map(per_km2),
            self.eve_density_per_m2,
        )?;

        let section = self.path_loss.clone().unwrap_or(PathLossSection {
            alpha_los: None,
            alpha_nlos: None,
            ref_distance_m: None,
            beta: None,
        });
        let (alpha_los, alpha_nlos) = match (section.alpha_los, section.alpha_nlos) {
            (Some(a), Some(b)) => (a, b),
            (None, None) => table_exponents(f_c).ok_or_else(|| {
                Error::invalid(
                    "path_loss",
                    format!(
                        "no measured exponents for {} GHz; set alpha_los and alpha_nlos",
                        f_c / 1e9
                    ),
                )
            })?,
            _ => {
                return Err(Error::invalid(
                    "path_loss",
                    "give both alpha_los and alpha_nlos or neither",
                ))
            }
        };
        let mut path_loss =
            PathLossModel::for_frequency(f_c, alpha_los, alpha_nlos, section.ref_distance_m.unwrap_or(1.0))?;
        if let Some(beta) = section.beta {
            path_loss.beta = beta;
            path_loss.validate()?;
        }

        let blockage = match self.blockage {
            BlockageSection::Exponential {
                mean_los_length_m,
                rho_per_m,
            } => BlockageModel::Exponential {
                rho: exactly_one("blockage.rho", mean_los_length_m.map(|m| 1.0 / m), rho_per_m)?,
            },
            BlockageSection::LosBall { d_los_m } => BlockageModel::LosBall { d_los: d_los_m },
        };

        let n = &self.noise;
        let from_budget = match (n.bandwidth_hz, n.noise_figure_db) {
            (Some(bw), Some(nf)) => Some(dbm_to_watts(noise_power_dbm(bw, nf))),
            (None, None) => None,
            _ => return Err(Error::invalid("noise", "give both bandwidth_hz and noise_figure_db")),
        };
        let explicit_rx = match (n.rx_dbm, n.rx_w) {
            (None, None) => None,
            (a, b) => Some(exactly_one("noise.rx", a.map(dbm_to_watts), b)?),
        };
        let noise_rx = exactly_one("noise.rx", explicit_rx, from_budget)?;
        let noise_eve = match (n.eve_dbm, n.eve_w) {
            (None, None) => noise_rx,
            (a, b) => exactly_one("noise.eve", a.map(dbm_to_watts), b)?,
        };

        let antenna = match &self.antenna {
            AntennaSection::Upa { n } => AntennaModel::Upa { n: *n },
            AntennaSection::Sectored { tx, rx } => AntennaModel::Sectored {
                tx: tx.resolve()?,
                rx: rx.resolve()?,
            },
            AntennaSection::Ula {
                n,
                n_eve,
                spacing_ratio,
                xi_ro_rad,
                phi_to_rad,
            } => AntennaModel::Ula(UlaConfig {
                n_tx: *n,
                n_eve: *n_eve,
                spacing_ratio: *spacing_ratio,
                xi_ro: *xi_ro_rad,
                phi_to: *phi_to_rad,
            }),
        };
        let eve_antenna = match &self.eve_antenna {
            None => None,
            Some(EveAntennaSection::Upa { n }) => Some(upa_pattern(*n)?),
            Some(EveAntennaSection::Sectored { pattern }) => Some(pattern.resolve()?),
        };
        let an = match &self.artificial_noise {
            None => None,
            Some(s) => Some(ArtificialNoise {
                mu: s.mu,
                signal: s.signal.resolve()?,
                noise: s.noise.resolve()?,
            }),
        };

        let config = SystemConfig {
            carrier_frequency: f_c,
            tx_power,
            tx_density,
            eve_density,
            dipole_distance: self.dipole_distance_m,
            path_loss,
            blockage,
            noise_rx,
            noise_eve,
            antenna,
            eve_antenna,
            an,
        };
        config.validate()?;
        if let Some(s) = &self.sweep {
            s.validate()?;
        }
        Ok(Scenario {
            config,
            sweep: self.sweep.clone(),
            notes: self.notes.clone(),
        })
    }

    /// Linear-SI document that resolves back to exactly `cfg`.
    pub fn from_config(cfg: &SystemConfig) -> Self {
        let antenna = match cfg.antenna {
            AntennaModel::Upa { n } => AntennaSection::Upa { n },
            AntennaModel::Sectored { tx, rx } => AntennaSection::Sectored {
                tx: PatternSpec::linear(&tx),
                rx: PatternSpec::linear(&rx),
            },
            AntennaModel::Ula(u) => AntennaSection::Ula {
                n: u.n_tx,
                n_eve: u.n_eve,
                spacing_ratio: u.spacing_ratio,
                xi_ro_rad: u.xi_ro,
                phi_to_rad: u.phi_to,
            },
        };
        ScenarioFile {
            notes: None,
            carrier_frequency_ghz: None,
            carrier_frequency_hz: Some(cfg.carrier_frequency),
            tx_power_dbm: None,
            tx_power_w: Some(cfg.tx_power),
            tx_density_per_km2: None,
            tx_density_per_m2: Some(cfg.tx_density),
            eve_density_per_km2: None,
            eve_density_per_m2: Some(cfg.eve_density),
            dipole_distance_m: cfg.dipole_distance,
            path_loss: Some(PathLossSection {
                alpha_los: Some(cfg.path_loss.alpha_los),
                alpha_nlos: Some(cfg.path_loss.alpha_nlos),
                ref_distance_m: Some(cfg.path_loss.ref_distance),
                beta: Some(cfg.path_loss.beta),
            }),
            blockage: match cfg.blockage {
                BlockageModel::Exponential { rho } => BlockageSection::Exponential {
                    mean_los_length_m: None,
                    rho_per_m: Some(rho),
                },
                BlockageModel::LosBall { d_los } => BlockageSection::LosBall { d_los_m: d_los },
            },
            noise: NoiseSection {
                bandwidth_hz: None,
                noise_figure_db: None,
                rx_dbm: None,
                rx_w: Some(cfg.noise_rx),
                eve_dbm: None,
                eve_w: Some(cfg.noise_eve),
            },
            antenna,
            eve_antenna: cfg.eve_antenna.map(|p| EveAntennaSection::Sectored {
                pattern: PatternSpec::linear(&p),
            }),
            artificial_noise: cfg.an.map(|an| AnSection {
                mu: an.mu,
                signal: PatternSpec::linear(&an.signal),
                noise: PatternSpec::linear(&an.noise),
            }),
            sweep: None,
        }
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }
}

pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let file: ScenarioFile = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    file.resolve()
}

pub fn load_scenario(path: &Path) -> Result<Scenario> {
    let text = fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    parse_scenario(&text).map_err(|e| match e {
        Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn load_config(path: &Path) -> Result<SystemConfig> {
    Ok(load_scenario(path)?.config)
}

/// Ready-made scenario reproducing one of the eight standard figures.
#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub figure: u8,
    pub title: &'static str,
    pub config: SystemConfig,
    pub sweep: SweepSpec,
    /// Second axis of the figure: one curve per value.
    pub series: Option<(SweepVar, Vec<f64>)>,
    /// Values not fixed by the figure description and how they were chosen.
    pub notes: &'static str,
}

impl Preset {
    pub fn file(&self) -> ScenarioFile {
        let mut file = ScenarioFile::from_config(&self.config);
        let mut notes = format!("Figure {}: {}.", self.figure, self.title);
        if let Some((var, values)) = &self.series {
            let list: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            notes.push_str(&format!(
                " Curves over {} = [{}] {}.",
                var.as_str(),
                list.join(", "),
                var.unit()
            ));
        }
        if !self.notes.is_empty() {
            notes.push(' ');
            notes.push_str(self.notes);
        }
        file.notes = Some(notes);
        file.sweep = Some(self.sweep.clone());
        file
    }

    /// The base configuration with the series variable set to each value.
    pub fn series_configs(&self) -> Result<Vec<(f64, SystemConfig)>> {
        match &self.series {
            None => Ok(vec![(f64::NAN, self.config.clone())]),
            Some((var, values)) => values.iter().map(|v| Ok((*v, var.apply(&self.config, *v)?))).collect(),
        }
    }
}

struct Base {
    f_ghz: f64,
    p_dbm: f64,
    lambda: f64,
    lambda_e: f64,
    r: f64,
    antenna: AntennaModel,
    eve: Option<SectoredPattern>,
    an: Option<ArtificialNoise>,
}

fn build(b: Base) -> Result<SystemConfig> {
    let f_c = b.f_ghz * 1e9;
    let (al, an) = table_exponents(f_c).expect("presets use measured bands");
    let noise = dbm_to_watts(noise_power_dbm(BANDWIDTH_HZ, NOISE_FIGURE_DB));
    let cfg = SystemConfig {
        carrier_frequency: f_c,
        tx_power: dbm_to_watts(b.p_dbm),
        tx_density: per_km2(b.lambda),
        eve_density: per_km2(b.lambda_e),
        dipole_distance: b.r,
        path_loss: PathLossModel::for_frequency(f_c, al, an, 1.0)?,
        blockage: BlockageModel::exponential_with_mean(MEAN_LOS_LENGTH),
        noise_rx: noise,
        noise_eve: noise,
        antenna: b.antenna,
        eve_antenna: b.eve,
        an: b.an,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn pattern(main_db: f64, side_db: f64, beamwidth_deg: f64) -> SectoredPattern {
    SectoredPattern::from_db(main_db, side_db, beamwidth_deg).expect("preset patterns are valid")
}

fn sweep(var: SweepVar, from: f64, to: f64, steps: usize, scale: Scale, methods: &[Method]) -> SweepSpec {
    SweepSpec {
        var,
        from,
        to,
        steps,
        scale,
        methods: methods.to_vec(),
    }
}

/// Preset for figure `1..=8`.
pub fn preset(figure: u8) -> Result<Preset> {
    use SweepVar::*;
    let upa16 = AntennaModel::Upa { n: 16 };
    let eve16 = Some(upa_pattern(16)?);
    let narrow = pattern(10.0, -10.0, 15.0);
    let wide = pattern(3.0, -3.0, 45.0);
    let p = match figure {
        1 => Preset {
            figure,
            title: "secrecy rate versus transmit power at four carriers",
            config: build(Base {
                f_ghz: 28.0,
                p_dbm: 20.0,
                lambda: 50.0,
                lambda_e: 100.0,
                r: 15.0,
                antenna: upa16,
                eve: eve16,
                an: None,
            })?,
            sweep: sweep(TxPowerDbm, 0.0, 40.0, 21, Scale::Linear, &[Method::Exact]),
            series: Some((Frequency, vec![28.0, 38.0, 60.0, 73.0])),
            notes: "Eavesdroppers use a 16-element UPA.",
        },
        2 => Preset {
            figure,
            title: "secrecy rate versus transmitter density at 60 GHz",
            config: build(Base {
                f_ghz: 60.0,
                p_dbm: 30.0,
                lambda: 50.0,
                lambda_e: 100.0,
                r: 15.0,
                antenna: upa16,
                eve: eve16,
                an: None,
            })?,
            sweep: sweep(TxDensity, 10.0, 500.0, 12, Scale::Log, &[Method::Exact]),
            series: Some((EveDensity, vec![50.0, 100.0, 300.0])),
            notes: "Eavesdropper densities are not fixed by the figure; 100 per km^2 is the base value.",
        },
        3 => Preset {
            figure,
            title: "typical-link and eavesdropper rates versus link distance",
            config: build(Base {
                f_ghz: 28.0,
                p_dbm: 10.0,
                lambda: 10.0,
                lambda_e: 100.0,
                r: 15.0,
                antenna: upa16,
                eve: eve16,
                an: None,
            })?,
            sweep: sweep(
                DipoleDistance,
                5.0,
                100.0,
                20,
                Scale::Linear,
                &[Method::Exact, Method::Lower],
            ),
            series: None,
            notes: "Carrier 28 GHz; the same sweep at 60 GHz only needs a different carrier frequency.",
        },
        4 => Preset {
            figure,
            title: "ULA secrecy rate versus array size",
            config: build(Base {
                f_ghz: 38.0,
                p_dbm: 10.0,
                lambda: 50.0,
                lambda_e: 100.0,
                r: 20.0,
                antenna: AntennaModel::Ula(UlaConfig::new(16, 4)),
                eve: None,
                an: None,
            })?,
            sweep: sweep(NAntennas, 4.0, 64.0, 5, Scale::Log, &[Method::Ula]),
            series: Some((NEveAntennas, vec![1.0, 4.0, 16.0])),
            notes: "Half-wavelength spacing; receive and departure angles pi/3.",
        },
        5 => Preset {
            figure,
            title: "ULA secrecy rate versus node densities",
            config: build(Base {
                f_ghz: 38.0,
                p_dbm: 10.0,
                lambda: 50.0,
                lambda_e: 100.0,
                r: 20.0,
                antenna: AntennaModel::Ula(UlaConfig::new(16, 4)),
                eve: None,
                an: None,
            })?,
            sweep: sweep(TxDensity, 10.0, 500.0, 10, Scale::Log, &[Method::Ula]),
            series: Some((EveDensity, vec![50.0, 100.0, 500.0])),
            notes: "Half-wavelength spacing; receive and departure angles pi/3.",
        },
        6 => Preset {
            figure,
            title: "secrecy rate with and without artificial noise at 60 GHz",
            config: build(Base {
                f_ghz: 60.0,
                p_dbm: 20.0,
                lambda: 20.0,
                lambda_e: 300.0,
                r: 50.0,
                antenna: AntennaModel::Sectored { tx: narrow, rx: narrow },
                eve: Some(wide),
                an: Some(ArtificialNoise {
                    mu: 0.85,
                    signal: wide,
                    noise: wide,
                }),
            })?,
            sweep: sweep(
                TxPowerDbm,
                0.0,
                40.0,
                21,
                Scale::Linear,
                &[Method::Exact, Method::AnExact],
            ),
            series: None,
            notes: "Receivers use the (10 dB, -10 dB, 15 deg) pattern; eavesdroppers use (3 dB, -3 dB, 45 deg).",
        },
        7 => Preset {
            figure,
            title: "lower bounds with and without artificial noise at 28 and 38 GHz",
            config: build(Base {
                f_ghz: 28.0,
                p_dbm: 20.0,
                lambda: 30.0,
                lambda_e: 500.0,
                r: 20.0,
                antenna: AntennaModel::Sectored {
                    tx: pattern(15.0, -15.0, 4.5),
                    rx: pattern(15.0, -15.0, 4.5),
                },
                eve: Some(wide),
                an: Some(ArtificialNoise {
                    mu: 0.85,
                    signal: narrow,
                    noise: wide,
                }),
            })?,
            sweep: sweep(
                TxPowerDbm,
                0.0,
                40.0,
                21,
                Scale::Linear,
                &[Method::Exact, Method::Lower, Method::AnExact, Method::AnLower],
            ),
            series: Some((Frequency, vec![28.0, 38.0])),
            notes: "Receivers use the no-noise transmit pattern (15 dB, -15 dB, 4.5 deg).",
        },
        8 => Preset {
            figure,
            title: "secrecy rate versus information power fraction",
            config: build(Base {
                f_ghz: 28.0,
                p_dbm: 30.0,
                lambda: 50.0,
                lambda_e: 500.0,
                r: 20.0,
                antenna: AntennaModel::Sectored { tx: narrow, rx: narrow },
                eve: Some(wide),
                an: Some(ArtificialNoise {
                    mu: 0.5,
                    signal: wide,
                    noise: wide,
                }),
            })?,
            sweep: sweep(Mu, 0.05, 1.0, 20, Scale::Linear, &[Method::AnExact]),
            series: Some((Frequency, vec![28.0, 38.0])),
            notes: "Link distance 20 m and eavesdropper pattern (3 dB, -3 dB, 45 deg) are not fixed by the figure.",
        },
        _ => {
            return Err(Error::invalid(
                "figure",
                format!("presets exist for figures 1 to 8, got {figure}"),
            ))
        }
    };
    Ok(p)
}
