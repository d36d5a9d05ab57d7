//! LoS-ball blockage: links longer than `d_los` are in outage, so only LoS
//! interferers and eavesdroppers inside the ball contribute.

use super::eve::{eve_levels, eve_rate_for_levels};
use super::radial::ball_unblocked;
use super::typical::avg_rate_typical_exact;
use crate::config::SystemConfig;
use crate::error::{ensure_positive, Error, Result};
use crate::geometry::BlockageModel;
use crate::numerics::{integrate_panels, QuadratureSpec};

fn require_ball(cfg: &SystemConfig, method: &str) -> Result<()> {
    match cfg.blockage {
        BlockageModel::LosBall { .. } => Ok(()),
        _ => Err(Error::NotApplicable {
            method: method.into(),
            reason: "blockage model is not a LoS ball".into(),
        }),
    }
}

/// Typical-link rate in the LoS-ball model; zero when `r > d_los`.
pub fn avg_rate_typical_exact_losball(cfg: &SystemConfig, spec: &QuadratureSpec) -> Result<f64> {
    require_ball(cfg, "losball")?;
    avg_rate_typical_exact(cfg, spec)
}

/// Strongest-eavesdropper rate in the LoS-ball model.
pub fn avg_rate_eve_exact_losball(cfg: &SystemConfig, spec: &QuadratureSpec) -> Result<f64> {
    require_ball(cfg, "losball")?;
    cfg.validate()?;
    eve_rate_for_levels(cfg, &eve_levels(cfg)?, spec)
}

/// `∫_0^D (1 − e^{−c max(u, d)^{−α}}) u du` through incomplete gammas of
/// order `1 − 2/α`.
pub fn losball_interference_gamma_form(c: f64, alpha: f64, d: f64, d_los: f64) -> Result<f64> {
    ensure_positive("c", c)?;
    ensure_positive("d", d)?;
    if d_los <= d {
        return Ok(-(-c * d.powf(-alpha)).exp_m1() * 0.5 * d_los * d_los);
    }
    let near = -(-c * d.powf(-alpha)).exp_m1();
    Ok(near * 0.5 * d * d + ball_unblocked(c, alpha, d, d_los)?)
}

/// The same integral by direct quadrature.
pub fn losball_interference_quadrature(c: f64, alpha: f64, d: f64, d_los: f64, spec: &QuadratureSpec) -> Result<f64> {
    ensure_positive("c", c)?;
    let mut points = vec![0.0, d.min(d_los)];
    if d_los > d {
        points.push(d_los);
    }
    integrate_panels(|u: f64| -(-c * u.max(d).powf(-alpha)).exp_m1() * u, &points, spec)
        .map_err(Error::numerical("LoS-ball interference integral"))
        .map(|r| r.value)
}
