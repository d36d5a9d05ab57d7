//! Spatial primitives: Poisson point processes in a disc, LoS/NLoS blockage
//! and the clamped power-law path loss.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use serde::{Deserialize, Serialize};

use crate::error::{ensure_non_negative, ensure_positive, Error, Result};
use crate::units::SPEED_OF_LIGHT;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn from_polar(radius: f64, azimuth: f64) -> Self {
        Point2D {
            x: radius * azimuth.cos(),
            y: radius * azimuth.sin(),
        }
    }

    /// Distance to the origin, where the typical receiver sits.
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance_to(&self, other: &Point2D) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinkState {
    Los,
    Nlos,
}

/// Probability that a link of a given length is line-of-sight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum BlockageModel {
    /// `exp(-rho * R)`; `rho` in 1/m.
    Exponential { rho: f64 },
    /// LoS up to `d_los` metres, blocked (outage) beyond.
    LosBall { d_los: f64 },
}

impl BlockageModel {
    pub fn exponential_with_mean(mean_los_length: f64) -> Self {
        BlockageModel::Exponential {
            rho: 1.0 / mean_los_length,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            BlockageModel::Exponential { rho } => ensure_positive("blockage.rho", rho),
            BlockageModel::LosBall { d_los } => ensure_positive("blockage.d_los", d_los),
        }
    }

    /// LoS probability for a link of length `distance`.
    pub fn los_probability(&self, distance: f64) -> Result<f64> {
        ensure_non_negative("distance", distance)?;
        Ok(self.p_los(distance))
    }

    /// Unchecked form used on hot paths; `distance` must be `>= 0`.
    #[inline]
    pub(crate) fn p_los(&self, distance: f64) -> f64 {
        match *self {
            BlockageModel::Exponential { rho } => (-rho * distance).exp(),
            BlockageModel::LosBall { d_los } => {
                if distance <= d_los {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Whether a blocked link still carries power (with the NLoS exponent).
    /// In the LoS-ball model a blocked link is in outage.
    pub fn nlos_carries_power(&self) -> bool {
        matches!(self, BlockageModel::Exponential { .. })
    }
}

/// `L(R) = beta * max(d, R)^(-alpha)` with `alpha` chosen by link state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathLossModel {
    pub beta: f64,
    pub alpha_los: f64,
    pub alpha_nlos: f64,
    pub ref_distance: f64,
}

impl PathLossModel {
    /// Model with the free-space intercept for carrier `f_c` (Hz).
    pub fn for_frequency(f_c: f64, alpha_los: f64, alpha_nlos: f64, ref_distance: f64) -> Result<Self> {
        Ok(PathLossModel {
            beta: beta_from_frequency(f_c)?,
            alpha_los,
            alpha_nlos,
            ref_distance,
        })
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("path_loss.beta", self.beta)?;
        ensure_positive("path_loss.ref_distance", self.ref_distance)?;
        if !(self.alpha_los.is_finite() && self.alpha_los >= 2.0) {
            return Err(Error::invalid(
                "path_loss.alpha_los",
                format!("must be >= 2, got {}", self.alpha_los),
            ));
        }
        // The mean NLoS interference only converges for an exponent above 2.
        if !(self.alpha_nlos.is_finite() && self.alpha_nlos > 2.0 && self.alpha_nlos >= self.alpha_los) {
            return Err(Error::invalid(
                "path_loss.alpha_nlos",
                format!(
                    "must be > 2 and >= alpha_los ({}), got {}",
                    self.alpha_los, self.alpha_nlos
                ),
            ));
        }
        Ok(())
    }

    pub fn exponent(&self, state: LinkState) -> f64 {
        match state {
            LinkState::Los => self.alpha_los,
            LinkState::Nlos => self.alpha_nlos,
        }
    }

    /// Linear path gain at `distance` metres.
    #[inline]
    pub fn path_loss(&self, distance: f64, state: LinkState) -> f64 {
        self.beta * distance.max(self.ref_distance).powf(-self.exponent(state))
    }
}

/// Free-space intercept `(c / (4 pi f_c))^2`.
pub fn beta_from_frequency(f_c: f64) -> Result<f64> {
    ensure_positive("carrier_frequency", f_c)?;
    Ok((SPEED_OF_LIGHT / (4.0 * PI * f_c)).powi(2))
}

pub fn path_loss(model: &PathLossModel, distance: f64, state: LinkState) -> f64 {
    model.path_loss(distance, state)
}

pub fn los_probability(model: &BlockageModel, distance: f64) -> Result<f64> {
    model.los_probability(distance)
}

/// Homogeneous PPP of `density` (per m²) restricted to a disc of
/// `window_radius` metres centred at the origin.
pub fn sample_ppp(density: f64, window_radius: f64, seed: u64) -> Result<Vec<Point2D>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_ppp_with(density, window_radius, &mut rng)
}

pub fn sample_ppp_with<R: Rng + ?Sized>(density: f64, window_radius: f64, rng: &mut R) -> Result<Vec<Point2D>> {
    ensure_non_negative("density", density)?;
    ensure_positive("window_radius", window_radius)?;
    let mean = density * PI * window_radius * window_radius;
    if mean == 0.0 {
        return Ok(Vec::new());
    }
    let count = Poisson::new(mean)
        .map_err(|e| Error::invalid("density", e.to_string()))?
        .sample(rng) as usize;
    Ok((0..count)
        .map(|_| {
            let radius = window_radius * rng.random::<f64>().sqrt();
            let azimuth = 2.0 * PI * rng.random::<f64>();
            Point2D::from_polar(radius, azimuth)
        })
        .collect())
}

pub fn sample_link_state<R: Rng + ?Sized>(p_los: f64, rng: &mut R) -> Result<LinkState> {
    if !(0.0..=1.0).contains(&p_los) {
        return Err(Error::invalid("p_los", format!("must lie in [0, 1], got {p_los}")));
    }
    Ok(draw_link_state(p_los, rng))
}

#[inline]
pub(crate) fn draw_link_state<R: Rng + ?Sized>(p_los: f64, rng: &mut R) -> LinkState {
    if rng.random::<f64>() < p_los {
        LinkState::Los
    } else {
        LinkState::Nlos
    }
}
