//! Antenna gain models.
//!
//! Two families are supported: the two-level sectored pattern with uniformly
//! random beam orientation (which yields a discrete [`GainDistribution`]) and
//! uniform linear arrays with matched-filter beamforming, whose gains follow
//! from steering-vector inner products.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_positive, Error, Result};
use crate::numerics::{mean_periodic, QuadratureSpec};
use crate::units::db_to_linear;

/// Two-level pattern: `g_main` inside a main lobe of width `beamwidth`,
/// `g_side` elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectoredPattern {
    pub g_main: f64,
    pub g_side: f64,
    /// Radians, in `(0, 2π]`.
    pub beamwidth: f64,
}

impl SectoredPattern {
    pub fn new(g_main: f64, g_side: f64, beamwidth: f64) -> Result<Self> {
        let p = SectoredPattern {
            g_main,
            g_side,
            beamwidth,
        };
        p.validate()?;
        Ok(p)
    }

    /// Pattern from gains in dB and beamwidth in degrees.
    pub fn from_db(g_main_db: f64, g_side_db: f64, beamwidth_deg: f64) -> Result<Self> {
        Self::new(
            db_to_linear(g_main_db),
            db_to_linear(g_side_db),
            beamwidth_deg.to_radians(),
        )
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("pattern.g_side", self.g_side)?;
        ensure_positive("pattern.g_main", self.g_main)?;
        if self.g_main < self.g_side {
            return Err(Error::invalid(
                "pattern.g_main",
                format!("main-lobe gain {} is below side-lobe gain {}", self.g_main, self.g_side),
            ));
        }
        if !(self.beamwidth > 0.0 && self.beamwidth <= TAU) {
            return Err(Error::invalid(
                "pattern.beamwidth",
                format!("must lie in (0, 2π], got {}", self.beamwidth),
            ));
        }
        Ok(())
    }

    /// Probability that a uniformly oriented beam covers a given direction.
    pub fn main_lobe_probability(&self) -> f64 {
        self.beamwidth / TAU
    }

    /// `(gain, probability)` for the main and side lobe.
    pub fn lobes(&self) -> [(f64, f64); 2] {
        let p = self.main_lobe_probability();
        [(self.g_main, p), (self.g_side, 1.0 - p)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GainLevel {
    pub gain: f64,
    pub probability: f64,
}

/// Discrete distribution of effective link gains. Levels are distinct,
/// sorted by decreasing gain, and carry positive probability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GainDistribution {
    levels: Vec<GainLevel>,
}

const MERGE_REL_TOL: f64 = 1e-12;

impl GainDistribution {
    /// Builds a distribution, merging equal gains and dropping zero-mass levels.
    pub fn new(levels: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let mut raw: Vec<GainLevel> = Vec::new();
        for (gain, probability) in levels {
            ensure_positive("gain", gain)?;
            if !(probability.is_finite() && probability >= 0.0) {
                return Err(Error::invalid(
                    "probability",
                    format!("must be >= 0, got {probability}"),
                ));
            }
            raw.push(GainLevel { gain, probability });
        }
        let total: f64 = raw.iter().map(|l| l.probability).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::invalid("probability", format!("must sum to 1, got {total}")));
        }
        raw.sort_by(|a, b| b.gain.total_cmp(&a.gain));
        let mut merged: Vec<GainLevel> = Vec::with_capacity(raw.len());
        for level in raw.into_iter().filter(|l| l.probability > 0.0) {
            match merged.last_mut() {
                Some(last) if (last.gain - level.gain).abs() <= MERGE_REL_TOL * last.gain => {
                    last.probability += level.probability;
                }
                _ => merged.push(level),
            }
        }
        Ok(GainDistribution { levels: merged })
    }

    pub fn single(gain: f64) -> Result<Self> {
        Self::new([(gain, 1.0)])
    }

    pub fn levels(&self) -> &[GainLevel] {
        &self.levels
    }

    pub fn max_gain(&self) -> f64 {
        self.levels[0].gain
    }

    pub fn mean(&self) -> f64 {
        self.levels.iter().map(|l| l.gain * l.probability).sum()
    }
}

/// Effective gain `G_tx G_rx` of a link whose two ends point independently
/// and uniformly at random.
pub fn sectored_pair_distribution(tx: &SectoredPattern, rx: &SectoredPattern) -> GainDistribution {
    let mut levels = Vec::with_capacity(4);
    for (g_tx, p_tx) in tx.lobes() {
        for (g_rx, p_rx) in rx.lobes() {
            levels.push((g_tx * g_rx, p_tx * p_rx));
        }
    }
    GainDistribution::new(levels).expect("validated patterns give a valid distribution")
}

pub fn mean_gain(dist: &GainDistribution) -> f64 {
    dist.mean()
}

/// Joint gain level of an interferer's information signal and artificial
/// noise at a receiver: both share the receiver-side lobe.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnGainLevel {
    pub signal_gain: f64,
    pub noise_gain: f64,
    pub probability: f64,
}

/// Levels `(G^S_ℓ G_k, G^A_ν G_k)` with probability `p^S_ℓ p^A_ν p_k`, where
/// `k` is the lobe of `rx` and `ℓ`, `ν` are the signal and noise beam lobes.
pub fn an_gain_levels(signal: &SectoredPattern, noise: &SectoredPattern, rx: &SectoredPattern) -> Vec<AnGainLevel> {
    let mut out = Vec::with_capacity(8);
    for (g_k, p_k) in rx.lobes() {
        for (g_s, p_s) in signal.lobes() {
            for (g_a, p_a) in noise.lobes() {
                let probability = p_k * p_s * p_a;
                if probability > 0.0 {
                    out.push(AnGainLevel {
                        signal_gain: g_s * g_k,
                        noise_gain: g_a * g_k,
                        probability,
                    });
                }
            }
        }
    }
    out
}

/// Sectored approximation of an `n`-element uniform planar array.
pub fn upa_pattern(n: u32) -> Result<SectoredPattern> {
    if n < 4 {
        return Err(Error::invalid(
            "n_antennas",
            format!("UPA pattern needs n >= 4, got {n}"),
        ));
    }
    let root = (n as f64).sqrt();
    SectoredPattern::new(n as f64, 1.0 / (3.0 * PI / (2.0 * root)).sin().powi(2), TAU / root)
}

/// Uniform linear array geometry shared by all nodes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UlaConfig {
    pub n_tx: u32,
    pub n_eve: u32,
    /// Element spacing over wavelength.
    pub spacing_ratio: f64,
    /// Arrival angle at the typical receiver, radians.
    pub xi_ro: f64,
    /// Departure angle of the typical transmitter, radians.
    pub phi_to: f64,
}

impl UlaConfig {
    pub fn new(n_tx: u32, n_eve: u32) -> Self {
        UlaConfig {
            n_tx,
            n_eve,
            spacing_ratio: 0.5,
            xi_ro: PI / 3.0,
            phi_to: PI / 3.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_tx < 1 {
            return Err(Error::invalid("ula.n_tx", "must be >= 1"));
        }
        if self.n_eve < 1 {
            return Err(Error::invalid("ula.n_eve", "must be >= 1"));
        }
        ensure_positive("ula.spacing_ratio", self.spacing_ratio)?;
        if !(self.xi_ro.is_finite() && self.phi_to.is_finite()) {
            return Err(Error::invalid("ula.angles", "must be finite"));
        }
        Ok(())
    }
}

/// Steering vector `exp(-j 2π s k sin(angle))`, `k = 0..q`.
pub fn ula_steering(angle: f64, q: u32, spacing_ratio: f64) -> Vec<Complex64> {
    let phase = -TAU * spacing_ratio * angle.sin();
    (0..q).map(|k| Complex64::from_polar(1.0, phase * k as f64)).collect()
}

pub fn ula_boresight_gain(n: u32) -> f64 {
    let n = n as f64;
    n * n
}

/// Array factor `(1 − cos NK)/(1 − cos K) = sin²(NK/2)/sin²(K/2)`, with
/// its limit `N²` at multiples of 2π.
pub fn array_factor(n: u32, k: f64) -> f64 {
    let nf = n as f64;
    let reduced = k - TAU * (k / TAU).round();
    if 1.0 - reduced.cos() < 1e-9 {
        return nf * nf * (1.0 - (nf * nf - 1.0) * reduced * reduced / 12.0);
    }
    let num = (0.5 * nf * reduced).sin();
    let den = (0.5 * reduced).sin();
    (num * num) / (den * den)
}

fn phase_offset(spacing_ratio: f64, a: f64, b: f64) -> f64 {
    TAU * spacing_ratio * (a.sin() - b.sin())
}

/// Gain of interferer `i` at the typical receiver with matched filters at
/// both ends.
pub fn ula_interferer_gain(xi_ro: f64, xi_rio: f64, phi_tio: f64, phi_ti: f64, n: u32, spacing_ratio: f64) -> f64 {
    let k1 = phase_offset(spacing_ratio, xi_ro, xi_rio);
    let k2 = phase_offset(spacing_ratio, phi_tio, phi_ti);
    array_factor(n, k1) * array_factor(n, k2) / ula_boresight_gain(n)
}

/// Gain of the typical transmitter at an eavesdropper with an `n_eve`-element
/// matched-filter receiver.
pub fn ula_eavesdropper_gain(phi_teo: f64, phi_to: f64, n: u32, n_eve: u32, spacing_ratio: f64) -> f64 {
    let ratio = n_eve as f64 / n as f64;
    ratio * ratio * array_factor(n, phase_offset(spacing_ratio, phi_teo, phi_to))
}

/// Mean interferer gain `E[G_i]` with the interferer angles uniform on
/// `[0, 2π)` and the typical receiver steered to `xi_ro`.
pub fn ula_mean_interferer_gain(n: u32, spacing_ratio: f64, xi_ro: f64, spec: &QuadratureSpec) -> Result<f64> {
    if n < 1 {
        return Err(Error::invalid("n_antennas", "must be >= 1"));
    }
    ensure_positive("spacing_ratio", spacing_ratio)?;
    let rx_mean = mean_periodic(|xi| array_factor(n, phase_offset(spacing_ratio, xi_ro, xi)), TAU, spec)
        .map_err(Error::numerical("ULA receive-side mean gain"))?
        .value;
    let mut inner_failure = None;
    let tx_mean = mean_periodic(
        |phi_tio| match mean_periodic(
            |phi_ti| array_factor(n, phase_offset(spacing_ratio, phi_tio, phi_ti)),
            TAU,
            spec,
        ) {
            Ok(r) => r.value,
            Err(e) => {
                inner_failure.get_or_insert(e);
                0.0
            }
        },
        TAU,
        spec,
    )
    .map_err(Error::numerical("ULA transmit-side mean gain"))?
    .value;
    if let Some(e) = inner_failure {
        return Err(Error::numerical("ULA transmit-side mean gain")(e));
    }
    Ok(rx_mean * tx_mean / ula_boresight_gain(n))
}
