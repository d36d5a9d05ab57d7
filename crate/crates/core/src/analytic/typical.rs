//! Average rate of the typical transmitter-receiver link: exact integral,
//! Jensen lower bound, and the density cap that inverts the bound.

use std::f64::consts::PI;

use super::radial::{laplace_rate, inner_spec, los_mass, InterferenceField, LinkSignal};
use crate::config::SystemConfig;
use crate::error::{ensure_positive, Error, Result};
use crate::geometry::{BlockageModel, LinkState, PathLossModel};
use crate::numerics::{integrate_finite, integrate_semi_infinite, upper_incomplete_gamma, QuadratureSpec};

/// Typical link carrying received power `power_gain · L(r)` in each state.
pub(crate) fn typical_signal(cfg: &SystemConfig, power_gain: f64) -> LinkSignal {
    let r = cfg.dipole_distance;
    let pl = &cfg.path_loss;
    LinkSignal {
        p_los: cfg.blockage.p_los(r),
        los: power_gain * pl.path_loss(r, LinkState::Los),
        nlos: if cfg.blockage.nlos_carries_power() {
            power_gain * pl.path_loss(r, LinkState::Nlos)
        } else {
            0.0
        },
    }
}

pub(crate) fn typical_in_outage(cfg: &SystemConfig) -> bool {
    !cfg.blockage.nlos_carries_power() && cfg.blockage.p_los(cfg.dipole_distance) == 0.0
}

fn interference_field(cfg: &SystemConfig) -> Result<InterferenceField<'_>> {
    let levels = cfg
        .interferer_gains()?
        .levels()
        .iter()
        .map(|l| (cfg.tx_power * l.gain, l.probability))
        .collect();
    Ok(InterferenceField {
        density: cfg.tx_density,
        levels,
        path_loss: &cfg.path_loss,
        blockage: &cfg.blockage,
    })
}

/// Exact average rate of the typical link. With the LoS-ball blockage model
/// this is the same quantity as [`avg_rate_typical_exact_losball`](super::avg_rate_typical_exact_losball).
pub fn avg_rate_typical_exact(cfg: &SystemConfig, spec: &QuadratureSpec) -> Result<f64> {
    cfg.validate()?;
    let signal = typical_signal(cfg, cfg.tx_power * cfg.typical_gain()?);
    laplace_rate(&signal, &interference_field(cfg)?, cfg.noise_rx, spec)
}

/// `(Ξ₁(z), Ξ₂(z))`: signal and interference Laplace terms of the exact rate.
pub fn typical_laplace_terms(cfg: &SystemConfig, z: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    cfg.validate()?;
    ensure_positive("z", z)?;
    let signal = typical_signal(cfg, cfg.tx_power * cfg.typical_gain()?);
    let xi1 = signal.p_los * (-z * signal.los).exp() + (1.0 - signal.p_los) * (-z * signal.nlos).exp();
    let xi2 = interference_field(cfg)?.laplace(z, &inner_spec(spec))?;
    Ok((xi1, xi2))
}

/// `ᾱ = (α_LoS − α_NLoS) f(r) + α_NLoS`.
pub fn mean_exponent(cfg: &SystemConfig) -> f64 {
    let f = cfg.blockage.p_los(cfg.dipole_distance);
    let pl = &cfg.path_loss;
    (pl.alpha_los - pl.alpha_nlos) * f + pl.alpha_nlos
}

/// Mean aggregate interference per unit density and unit gain, exponential
/// blockage `e^{−ρR}`, in closed form.
pub fn lambda_closed_form(pl: &PathLossModel, rho: f64) -> Result<f64> {
    pl.validate()?;
    ensure_positive("rho", rho)?;
    let (d, al, an) = (pl.ref_distance, pl.alpha_los, pl.alpha_nlos);
    let dr = d * rho;
    let near = -(-dr).exp().mul_add(1.0 + dr, -1.0) / (rho * rho) * (d.powf(-al) - d.powf(-an));
    let los_far = upper_incomplete_gamma(2.0 - al, dr)? / rho.powf(2.0 - al);
    let nlos_all = an * d.powf(2.0 - an) / (2.0 * (an - 2.0));
    let nlos_far = upper_incomplete_gamma(2.0 - an, dr)? / rho.powf(2.0 - an);
    Ok(pl.beta * 2.0 * PI * (near + los_far + nlos_all - nlos_far))
}

/// The same quantity by direct quadrature of its defining integral, for any
/// blockage model (NLoS links always counted with the NLoS exponent).
pub fn lambda_quadrature(pl: &PathLossModel, blockage: &BlockageModel, spec: &QuadratureSpec) -> Result<f64> {
    pl.validate()?;
    blockage.validate()?;
    let (d, al, an) = (pl.ref_distance, pl.alpha_los, pl.alpha_nlos);
    let f = |r: f64| blockage.p_los(r);
    let near = integrate_finite(|r| ((d.powf(-al) - d.powf(-an)) * f(r) + d.powf(-an)) * r, 0.0, d, spec)
        .map_err(Error::numerical("interference mean, inner disc"))?
        .value;
    let far_integrand = |r: f64| (r.powf(1.0 - al) - r.powf(1.0 - an)) * f(r) + r.powf(1.0 - an);
    let far = match *blockage {
        BlockageModel::LosBall { d_los } if d_los > d => {
            integrate_finite(far_integrand, d, d_los, spec)
                .map_err(Error::numerical("interference mean, LoS ball"))?
                .value
                + integrate_semi_infinite(far_integrand, d_los, spec)
                    .map_err(Error::numerical("interference mean, outer region"))?
                    .value
        }
        _ => {
            integrate_semi_infinite(far_integrand, d, spec)
                .map_err(Error::numerical("interference mean, outer region"))?
                .value
        }
    };
    Ok(pl.beta * 2.0 * PI * (near + far))
}

/// Mean interference integral used by the lower bounds. In the LoS-ball
/// model blocked interferers carry no power.
pub fn interference_lambda(cfg: &SystemConfig) -> Result<f64> {
    let pl = &cfg.path_loss;
    match cfg.blockage {
        BlockageModel::Exponential { rho } => lambda_closed_form(pl, rho),
        BlockageModel::LosBall { d_los } => {
            let (d, al) = (pl.ref_distance, pl.alpha_los);
            let near = los_mass(&cfg.blockage, d) * d.powf(-al);
            let far = if d_los <= d {
                0.0
            } else if al == 2.0 {
                (d_los / d).ln()
            } else {
                (d_los.powf(2.0 - al) - d.powf(2.0 - al)) / (2.0 - al)
            };
            Ok(pl.beta * 2.0 * PI * (near + far))
        }
    }
}

/// `log₂(1 + S β r^{−ᾱ} / (λ W + noise_over_power))`.
pub(crate) fn jensen_rate(cfg: &SystemConfig, signal_gain: f64, weight: f64, noise_over_power: f64) -> f64 {
    if typical_in_outage(cfg) {
        return 0.0;
    }
    let r = cfg.dipole_distance.max(cfg.path_loss.ref_distance);
    let numerator = signal_gain * cfg.path_loss.beta * r.powf(-mean_exponent(cfg));
    (numerator / (cfg.tx_density * weight + noise_over_power)).ln_1p() / std::f64::consts::LN_2
}

/// Density at which [`jensen_rate`] equals `r_th`, floored at zero.
pub(crate) fn jensen_density(
    cfg: &SystemConfig,
    signal_gain: f64,
    weight: f64,
    noise_over_power: f64,
    r_th: f64,
) -> Result<f64> {
    ensure_positive("rate_threshold", r_th)?;
    if typical_in_outage(cfg) {
        return Ok(0.0);
    }
    let r = cfg.dipole_distance.max(cfg.path_loss.ref_distance);
    let numerator = signal_gain * cfg.path_loss.beta * r.powf(-mean_exponent(cfg));
    let headroom = numerator / (r_th * std::f64::consts::LN_2).exp_m1() - noise_over_power;
    Ok((headroom / weight).max(0.0))
}

/// Jensen lower bound on the typical-link rate.
pub fn avg_rate_typical_lower(cfg: &SystemConfig) -> Result<f64> {
    cfg.validate()?;
    let weight = cfg.interferer_gains()?.mean() * interference_lambda(cfg)?;
    Ok(jensen_rate(
        cfg,
        cfg.typical_gain()?,
        weight,
        cfg.noise_rx / cfg.tx_power,
    ))
}

/// Largest transmitter density for which the lower bound still reaches `r_th`.
pub fn max_density_for_rate(cfg: &SystemConfig, r_th: f64) -> Result<f64> {
    cfg.validate()?;
    let weight = cfg.interferer_gains()?.mean() * interference_lambda(cfg)?;
    jensen_density(cfg, cfg.typical_gain()?, weight, cfg.noise_rx / cfg.tx_power, r_th)
}
