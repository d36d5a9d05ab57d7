//! Average rate of the strongest (maximum-SNR) eavesdropper.

use std::f64::consts::PI;

use super::radial::{eve_breakpoint, eve_mass, eve_rate_integral, EveLevel};
use crate::config::SystemConfig;
use crate::error::{ensure_non_negative, Result};
use crate::numerics::QuadratureSpec;

pub(crate) fn eve_levels(cfg: &SystemConfig) -> Result<Vec<EveLevel>> {
    Ok(cfg
        .eve_gains()?
        .levels()
        .iter()
        .map(|l| EveLevel {
            signal: cfg.tx_power * l.gain * cfg.path_loss.beta,
            noise: 0.0,
            probability: l.probability,
        })
        .collect())
}

pub(crate) fn eve_rate_for_levels(cfg: &SystemConfig, levels: &[EveLevel], spec: &QuadratureSpec) -> Result<f64> {
    let pl = &cfg.path_loss;
    let mut breakpoints = Vec::with_capacity(2 * levels.len());
    for level in levels {
        breakpoints.push(eve_breakpoint(level, pl.alpha_los, cfg.noise_eve, pl.ref_distance));
        if cfg.blockage.nlos_carries_power() {
            breakpoints.push(eve_breakpoint(level, pl.alpha_nlos, cfg.noise_eve, pl.ref_distance));
        }
    }
    eve_rate_integral(
        |x| {
            let (los, nlos) = eve_mass(levels, x, cfg.noise_eve, pl, &cfg.blockage);
            Ok(los + nlos)
        },
        cfg.eve_density,
        breakpoints,
        spec,
    )
}

/// Exact average rate of the strongest eavesdropper. Under the LoS-ball
/// model blocked eavesdroppers receive nothing, which makes this identical to
/// [`avg_rate_eve_exact_losball`](super::avg_rate_eve_exact_losball).
pub fn avg_rate_eve_exact(cfg: &SystemConfig, spec: &QuadratureSpec) -> Result<f64> {
    cfg.validate()?;
    eve_rate_for_levels(cfg, &eve_levels(cfg)?, spec)
}

/// `(P₁(x), P₂(x))`: probabilities that no LoS, respectively no NLoS,
/// eavesdropper exceeds SNR `x`. Their product is the CDF of the best SNR.
pub fn eve_survival(cfg: &SystemConfig, x: f64) -> Result<(f64, f64)> {
    cfg.validate()?;
    ensure_non_negative("x", x)?;
    let levels = eve_levels(cfg)?;
    let (los, nlos) = eve_mass(&levels, x, cfg.noise_eve, &cfg.path_loss, &cfg.blockage);
    let scale = -2.0 * PI * cfg.eve_density;
    Ok(((scale * los).exp(), (scale * nlos).exp()))
}
