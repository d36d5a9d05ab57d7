//! First-principles simulator: sample both Poisson populations, form the
//! SINRs directly and average the log-rates. Serves as the oracle for the
//! analytic evaluators.
//!
//! Each trial draws from its own ChaCha stream (`seed`, stream = trial
//! index), so results do not depend on the number of worker threads.

use std::f64::consts::{LN_2, TAU};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::secrecy_rate;
use crate::antenna::{ula_boresight_gain, ula_eavesdropper_gain, ula_interferer_gain, SectoredPattern, UlaConfig};
use crate::config::{AntennaModel, SystemConfig};
use crate::error::{ensure_positive, Error, Result};
use crate::geometry::{draw_link_state, sample_ppp_with, LinkState, Point2D};
use crate::report::{McSummary, Method, RateReport, TrialEstimate};

pub const MIN_TRIALS: usize = 100;

/// A node of either population with its drawn link state and gains.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub point: Point2D,
    pub state: LinkState,
    /// Information-beam gain product towards the receiver of interest.
    pub gain: f64,
    /// Artificial-noise beam gain product; zero without artificial noise.
    pub noise_gain: f64,
    /// Departure angle from the typical transmitter (ULA eavesdroppers only).
    pub angle: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkRealization {
    pub interferers: Vec<Node>,
    pub eavesdroppers: Vec<Node>,
    pub typical_state: LinkState,
}

/// `max(10/√λ', 2 km)` with `λ'` the smallest positive density.
pub fn default_window_radius(cfg: &SystemConfig) -> f64 {
    let smallest = [cfg.tx_density, cfg.eve_density]
        .into_iter()
        .filter(|d| *d > 0.0)
        .fold(f64::INFINITY, f64::min);
    if smallest.is_finite() {
        (10.0 / smallest.sqrt()).max(2000.0)
    } else {
        2000.0
    }
}

/// Per-configuration gain model resolved once before sampling.
#[derive(Debug, Clone, Copy)]
enum Gains {
    Sectored {
        tx: SectoredPattern,
        rx: SectoredPattern,
        eve: SectoredPattern,
    },
    Noise {
        signal: SectoredPattern,
        noise: SectoredPattern,
        rx: SectoredPattern,
        eve: SectoredPattern,
    },
    Ula(UlaConfig),
}

fn lobe<R: Rng + ?Sized>(p: &SectoredPattern, rng: &mut R) -> f64 {
    if rng.random::<f64>() < p.main_lobe_probability() {
        p.g_main
    } else {
        p.g_side
    }
}

fn uniform_angle<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    TAU * rng.random::<f64>()
}

impl Gains {
    fn resolve(cfg: &SystemConfig) -> Result<Self> {
        if let AntennaModel::Ula(u) = cfg.antenna {
            return Ok(Gains::Ula(u));
        }
        let (rx, eve) = (cfg.rx_pattern()?, cfg.eve_pattern()?);
        Ok(match cfg.an {
            Some(an) => Gains::Noise {
                signal: an.signal,
                noise: an.noise,
                rx,
                eve,
            },
            None => Gains::Sectored {
                tx: cfg.tx_pattern()?,
                rx,
                eve,
            },
        })
    }

    /// Main-lobe gain of the typical link.
    fn typical(&self) -> f64 {
        match self {
            Gains::Sectored { tx, rx, .. } => tx.g_main * rx.g_main,
            Gains::Noise { signal, rx, .. } => signal.g_main * rx.g_main,
            Gains::Ula(u) => ula_boresight_gain(u.n_tx),
        }
    }

    /// `(gain, noise_gain, angle)` of one interferer (`towards_eve = false`)
    /// or one eavesdropper.
    fn draw<R: Rng + ?Sized>(&self, towards_eve: bool, rng: &mut R) -> (f64, f64, Option<f64>) {
        match self {
            Gains::Sectored { tx, rx, eve } => {
                let far = if towards_eve { eve } else { rx };
                (lobe(tx, rng) * lobe(far, rng), 0.0, None)
            }
            Gains::Noise { signal, noise, rx, eve } => {
                // Both beams share the receiver-side lobe.
                let g_k = lobe(if towards_eve { eve } else { rx }, rng);
                (lobe(signal, rng) * g_k, lobe(noise, rng) * g_k, None)
            }
            Gains::Ula(u) => {
                if towards_eve {
                    let phi = uniform_angle(rng);
                    let g = ula_eavesdropper_gain(phi, u.phi_to, u.n_tx, u.n_eve, u.spacing_ratio);
                    (g, 0.0, Some(phi))
                } else {
                    let (xi, phi_o, phi_i) = (uniform_angle(rng), uniform_angle(rng), uniform_angle(rng));
                    let g = ula_interferer_gain(u.xi_ro, xi, phi_o, phi_i, u.n_tx, u.spacing_ratio);
                    (g, 0.0, None)
                }
            }
        }
    }
}

fn sample_nodes<R: Rng + ?Sized>(
    cfg: &SystemConfig,
    gains: &Gains,
    density: f64,
    towards_eve: bool,
    window_radius: f64,
    rng: &mut R,
) -> Result<Vec<Node>> {
    let points = sample_ppp_with(density, window_radius, rng)?;
    Ok(points
        .into_iter()
        .map(|point| {
            let state = draw_link_state(cfg.blockage.p_los(point.norm()), rng);
            let (gain, noise_gain, angle) = gains.draw(towards_eve, rng);
            Node {
                point,
                state,
                gain,
                noise_gain,
                angle,
            }
        })
        .collect())
}

fn realization_with<R: Rng + ?Sized>(
    cfg: &SystemConfig,
    gains: &Gains,
    window_radius: f64,
    rng: &mut R,
) -> Result<NetworkRealization> {
    let typical_state = draw_link_state(cfg.blockage.p_los(cfg.dipole_distance), rng);
    let interferers = sample_nodes(cfg, gains, cfg.tx_density, false, window_radius, rng)?;
    let eavesdroppers = sample_nodes(cfg, gains, cfg.eve_density, true, window_radius, rng)?;
    Ok(NetworkRealization {
        interferers,
        eavesdroppers,
        typical_state,
    })
}

/// One network snapshot: interferers around the typical receiver and
/// eavesdroppers around the typical transmitter, both in a disc of
/// `window_radius`.
pub fn sample_realization<R: Rng + ?Sized>(
    cfg: &SystemConfig,
    window_radius: f64,
    rng: &mut R,
) -> Result<NetworkRealization> {
    cfg.validate()?;
    ensure_positive("window_radius", window_radius)?;
    realization_with(cfg, &Gains::resolve(cfg)?, window_radius, rng)
}

/// Path loss that vanishes for blocked links when NLoS carries no power.
fn channel(cfg: &SystemConfig, distance: f64, state: LinkState) -> f64 {
    if state == LinkState::Nlos && !cfg.blockage.nlos_carries_power() {
        0.0
    } else {
        cfg.path_loss.path_loss(distance, state)
    }
}

/// `(P_S, P_A)`, with `P_A = 0` without artificial noise.
fn powers(cfg: &SystemConfig) -> (f64, f64) {
    match cfg.an {
        Some(an) => (an.mu * cfg.tx_power, (1.0 - an.mu) * cfg.tx_power),
        None => (cfg.tx_power, 0.0),
    }
}

fn typical_sinr_with(real: &NetworkRealization, cfg: &SystemConfig, typical_gain: f64) -> f64 {
    let (p_s, p_a) = powers(cfg);
    let signal = p_s * typical_gain * channel(cfg, cfg.dipole_distance, real.typical_state);
    let interference: f64 = real
        .interferers
        .iter()
        .map(|n| (p_s * n.gain + p_a * n.noise_gain) * channel(cfg, n.point.norm(), n.state))
        .sum();
    signal / (interference + cfg.noise_rx)
}

fn eve_sinr_with(real: &NetworkRealization, cfg: &SystemConfig) -> f64 {
    let (p_s, p_a) = powers(cfg);
    real.eavesdroppers
        .iter()
        .map(|n| {
            let l = channel(cfg, n.point.norm(), n.state);
            p_s * n.gain * l / (p_a * n.noise_gain * l + cfg.noise_eve)
        })
        .fold(0.0, f64::max)
}

/// SINR at the typical receiver; interferers with artificial noise add
/// `P_A G^A L` on top of their information power.
pub fn typical_sinr(real: &NetworkRealization, cfg: &SystemConfig) -> Result<f64> {
    Ok(typical_sinr_with(real, cfg, Gains::resolve(cfg)?.typical()))
}

/// SINR of the strongest eavesdropper; 0 when there are none.
/// Eavesdroppers are noise-limited apart from the typical transmitter's
/// own artificial noise.
pub fn eve_sinr(real: &NetworkRealization, cfg: &SystemConfig) -> Result<f64> {
    cfg.validate()?;
    Ok(eve_sinr_with(real, cfg))
}

/// `(typical SINR, strongest-eavesdropper SINR)` for an artificial-noise
/// configuration.
pub fn an_sinrs(real: &NetworkRealization, cfg: &SystemConfig) -> Result<(f64, f64)> {
    cfg.artificial_noise()?;
    Ok((typical_sinr(real, cfg)?, eve_sinr(real, cfg)?))
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Average typical, eavesdropper and secrecy rates over `n_trials`
/// independent realizations. The secrecy rate clamps the difference of the
/// averages, matching the analytic convention.
pub fn estimate_rates(
    cfg: &SystemConfig,
    n_trials: usize,
    seed: u64,
    window_radius: Option<f64>,
) -> Result<RateReport> {
    cfg.validate()?;
    if n_trials < MIN_TRIALS {
        return Err(Error::invalid(
            "n_trials",
            format!("need at least {MIN_TRIALS}, got {n_trials}"),
        ));
    }
    let window_radius = window_radius.unwrap_or_else(|| default_window_radius(cfg));
    ensure_positive("window_radius", window_radius)?;
    let gains = Gains::resolve(cfg)?;
    let typical_gain = gains.typical();
    let samples: Vec<(f64, f64)> = (0..n_trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let real = realization_with(cfg, &gains, window_radius, &mut rng)?;
            let r_o = typical_sinr_with(&real, cfg, typical_gain).ln_1p() / LN_2;
            let r_e = eve_sinr_with(&real, cfg).ln_1p() / LN_2;
            Ok((r_o, r_e))
        })
        .collect::<Result<_>>()?;
    let typical = TrialEstimate::from_samples(&samples.iter().map(|s| s.0).collect::<Vec<_>>());
    let eve = TrialEstimate::from_samples(&samples.iter().map(|s| s.1).collect::<Vec<_>>());
    let difference = TrialEstimate::from_samples(&samples.iter().map(|s| s.0 - s.1).collect::<Vec<_>>());
    Ok(RateReport {
        method: Method::MonteCarlo,
        rate_typical: typical.mean,
        rate_eve: eve.mean,
        rate_secrecy: secrecy_rate(typical.mean, eve.mean),
        mc: Some(McSummary {
            typical,
            eve,
            difference,
            window_radius,
            seed,
        }),
    })
}
