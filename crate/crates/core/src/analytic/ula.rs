//! Uniform-linear-array variants: lower bound on the typical-link rate and
//! the exact strongest-eavesdropper rate with a continuous angular gain.

use std::f64::consts::{PI, TAU};

use super::radial::{eve_rate_integral, inner_spec, los_mass, nlos_mass};
use super::secrecy_rate;
use super::typical::{interference_lambda, jensen_rate};
use crate::antenna::{array_factor, ula_boresight_gain, ula_mean_interferer_gain, UlaConfig};
use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::numerics::{integrate_finite, QuadratureSpec};

/// Lower bound on the typical-link rate with ULAs at every node.
pub fn avg_rate_typical_lower_ula(cfg: &SystemConfig, spec: &QuadratureSpec) -> Result<f64> {
    cfg.validate()?;
    let ula = cfg.ula()?;
    let g_bar = ula_mean_interferer_gain(ula.n_tx, ula.spacing_ratio, ula.xi_ro, &inner_spec(spec))?;
    let weight = g_bar * interference_lambda(cfg)?;
    Ok(jensen_rate(
        cfg,
        ula_boresight_gain(ula.n_tx),
        weight,
        cfg.noise_rx / cfg.tx_power,
    ))
}

/// One monotone-up-then-down piece of the array factor in phase space.
#[derive(Debug, Clone, Copy)]
struct Lobe {
    left: f64,
    right: f64,
    peak_at: f64,
    peak: f64,
}

/// Array-factor lobes over the phase range swept by departure angles in
/// `[−π/2, π/2]`. Nulls sit at `2πm/N`.
struct LobeMap {
    n: u32,
    scale: f64,
    offset: f64,
    lobes: Vec<Lobe>,
}

impl LobeMap {
    fn new(ula: &UlaConfig) -> Self {
        let n = ula.n_tx;
        let scale = TAU * ula.spacing_ratio;
        let offset = ula.phi_to.sin();
        let (k_lo, k_hi) = (scale * (-1.0 - offset), scale * (1.0 - offset));
        let step = TAU / n as f64;
        let mut edges = vec![k_lo];
        if n > 1 {
            let first = (k_lo / step).floor() as i64 + 1;
            let mut m = first;
            while (m as f64) * step < k_hi {
                if m.rem_euclid(n as i64) != 0 {
                    edges.push(m as f64 * step);
                }
                m += 1;
            }
        }
        edges.push(k_hi);
        let lobes = edges
            .windows(2)
            .filter(|w| w[1] > w[0])
            .map(|w| {
                let peak_at = golden_max(|k| array_factor(n, k), w[0], w[1]);
                Lobe {
                    left: w[0],
                    right: w[1],
                    peak_at,
                    peak: array_factor(n, peak_at),
                }
            })
            .collect();
        LobeMap {
            n,
            scale,
            offset,
            lobes,
        }
    }

    fn angle(&self, k: f64) -> f64 {
        (k / self.scale + self.offset).clamp(-1.0, 1.0).asin()
    }

    /// Angular intervals in `[−π/2, π/2]` where the array factor exceeds `level`.
    fn superlevel(&self, level: f64) -> Vec<(f64, f64)> {
        let f = |k: f64| array_factor(self.n, k);
        let mut out = Vec::new();
        for lobe in &self.lobes {
            if lobe.peak <= level {
                continue;
            }
            let a = if f(lobe.left) >= level {
                lobe.left
            } else {
                crossing(f, lobe.left, lobe.peak_at, level)
            };
            let b = if f(lobe.right) >= level {
                lobe.right
            } else {
                crossing(f, lobe.right, lobe.peak_at, level)
            };
            let (pa, pb) = (self.angle(a), self.angle(b));
            if pb > pa {
                out.push((pa, pb));
            }
        }
        out
    }
}

fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() <= 1e-15 * (1.0 + a.abs()) {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let mid = 0.5 * (a + b);
    // Interval ends may hold the true maximum when the lobe is cut by the range.
    [mid, a, b]
        .into_iter()
        .max_by(|x, y| f(*x).total_cmp(&f(*y)))
        .unwrap_or(mid)
}

/// Point between `low` (where `f < level`) and `high` (where `f > level`) at
/// which `f` crosses `level`; Illinois-modified regula falsi.
fn crossing<F: Fn(f64) -> f64>(f: F, low: f64, high: f64, level: f64) -> f64 {
    let (mut a, mut b) = (low, high);
    let (mut fa, mut fb) = (f(a) - level, f(b) - level);
    let mut side = 0i8;
    for _ in 0..200 {
        let c = (a * fb - b * fa) / (fb - fa);
        let c = if c.is_finite() && (c - a) * (c - b) < 0.0 {
            c
        } else {
            0.5 * (a + b)
        };
        let fc = f(c) - level;
        if fc == 0.0 || (b - a).abs() <= 1e-14 * (1.0 + c.abs()) {
            return c;
        }
        if (fc < 0.0) == (fa < 0.0) {
            a = c;
            fa = fc;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        } else {
            b = c;
            fb = fc;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        }
    }
    0.5 * (a + b)
}

/// Exact strongest-eavesdropper rate when the typical transmitter is a ULA
/// and eavesdropper departure angles are uniform.
pub fn avg_rate_eve_exact_ula(cfg: &SystemConfig, spec: &QuadratureSpec) -> Result<f64> {
    cfg.validate()?;
    let ula = cfg.ula()?;
    if cfg.eve_density == 0.0 || cfg.tx_power == 0.0 {
        return Ok(0.0);
    }
    let map = LobeMap::new(&ula);
    let pl = &cfg.path_loss;
    let d = pl.ref_distance;
    let ratio = (ula.n_eve as f64 / ula.n_tx as f64).powi(2);
    // Received SNR scale: P β (N_e/N)² F(K) / σ².
    let snr_scale = cfg.tx_power * cfg.path_loss.beta * ratio / cfg.noise_eve;
    let mut exponents = vec![(pl.alpha_los, true)];
    if cfg.blockage.nlos_carries_power() {
        exponents.push((pl.alpha_nlos, false));
    }
    let mut breakpoints = Vec::new();
    for &(alpha, _) in &exponents {
        for lobe in &map.lobes {
            breakpoints.push(snr_scale * lobe.peak / d.powf(alpha));
        }
    }
    let inner = inner_spec(spec);
    let mass = |x: f64| -> Result<f64> {
        let mut total = 0.0;
        for &(alpha, los) in &exponents {
            let level = x * d.powf(alpha) / snr_scale;
            for (a, b) in map.superlevel(level) {
                let piece = integrate_finite(
                    |phi| {
                        let gain = array_factor(map.n, map.scale * (phi.sin() - map.offset));
                        let t = (snr_scale * gain / x).powf(1.0 / alpha);
                        if t <= d {
                            return 0.0;
                        }
                        if los {
                            los_mass(&cfg.blockage, t)
                        } else {
                            nlos_mass(&cfg.blockage, t)
                        }
                    },
                    a,
                    b,
                    &inner,
                )
                .map_err(Error::numerical("ULA eavesdropper angular integral"))?;
                total += piece.value;
            }
        }
        Ok(total / PI)
    };
    eve_rate_integral(mass, cfg.eve_density, breakpoints, spec)
}

/// `[ULA lower bound − ULA eavesdropper rate]⁺`.
pub fn secrecy_rate_ula_lower(cfg: &SystemConfig, spec: &QuadratureSpec) -> Result<f64> {
    Ok(secrecy_rate(
        avg_rate_typical_lower_ula(cfg, spec)?,
        avg_rate_eve_exact_ula(cfg, spec)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::avg_rate_typical_lower;
    use crate::antenna::{ula_eavesdropper_gain, SectoredPattern};
    use crate::config::fixtures::upa16;
    use crate::config::AntennaModel;
    use crate::geometry::PathLossModel;

    pub(crate) fn ula_cfg(n: u32, n_eve: u32) -> SystemConfig {
        let mut cfg = upa16(10.0);
        cfg.carrier_frequency = 38e9;
        cfg.path_loss = PathLossModel::for_frequency(38e9, 2.0, 3.71, 1.0).unwrap();
        cfg.dipole_distance = 20.0;
        cfg.antenna = AntennaModel::Ula(UlaConfig::new(n, n_eve));
        cfg.eve_antenna = None;
        cfg
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec::new(1e-8, 1e-13)
    }

    #[test]
    fn single_element_matches_unit_gain_sectored_bound() {
        let cfg = ula_cfg(1, 1);
        let mut sectored = cfg.clone();
        let unit = SectoredPattern::new(1.0, 1.0, TAU).unwrap();
        sectored.antenna = AntennaModel::Sectored { tx: unit, rx: unit };
        sectored.eve_antenna = Some(unit);
        let a = avg_rate_typical_lower_ula(&cfg, &spec()).unwrap();
        let b = avg_rate_typical_lower(&sectored).unwrap();
        assert!((a - b).abs() < 1e-12 * b);
        // With unit gains everywhere the eavesdropper rates coincide as well.
        let ea = avg_rate_eve_exact_ula(&cfg, &spec()).unwrap();
        let eb = crate::analytic::avg_rate_eve_exact(&sectored, &spec()).unwrap();
        assert!((ea - eb).abs() < 1e-7 * eb, "{ea} vs {eb}");
    }

    #[test]
    fn superlevel_measure_matches_direct_average() {
        let ula = UlaConfig::new(16, 4);
        let map = LobeMap::new(&ula);
        for level in [0.5, 3.0, 20.0, 200.0] {
            let measure: f64 = map.superlevel(level).iter().map(|(a, b)| b - a).sum::<f64>() / PI;
            // The indicator is discontinuous, so compare against a fine grid.
            let grid = 2_000_000;
            let hits = (0..grid)
                .filter(|i| {
                    let phi = TAU * (*i as f64 + 0.5) / grid as f64;
                    ula_eavesdropper_gain(phi, ula.phi_to, 16, 16, 0.5) > level
                })
                .count() as f64
                / grid as f64;
            assert!((measure - hits).abs() < 1e-5, "level {level}: {measure} vs {hits}");
        }
    }

    #[test]
    fn eve_rate_trends_in_array_sizes() {
        let base = avg_rate_eve_exact_ula(&ula_cfg(16, 4), &spec()).unwrap();
        assert!(base > 0.0);
        assert!(avg_rate_eve_exact_ula(&ula_cfg(32, 4), &spec()).unwrap() < base);
        assert!(avg_rate_eve_exact_ula(&ula_cfg(16, 8), &spec()).unwrap() > base);
        let mut none = ula_cfg(16, 4);
        none.eve_density = 0.0;
        assert_eq!(avg_rate_eve_exact_ula(&none, &spec()).unwrap(), 0.0);
    }

    #[test]
    fn lower_bound_increases_with_array_size() {
        let rates: Vec<f64> = [4, 8, 16, 32, 64]
            .into_iter()
            .map(|n| avg_rate_typical_lower_ula(&ula_cfg(n, 4), &spec()).unwrap())
            .collect();
        assert!(rates.windows(2).all(|w| w[1] > w[0]), "{rates:?}");
    }

    #[test]
    fn secrecy_composes_and_clamps() {
        let mut cfg = ula_cfg(16, 4);
        cfg.eve_density = 0.0;
        let s = secrecy_rate_ula_lower(&cfg, &spec()).unwrap();
        assert_eq!(s, avg_rate_typical_lower_ula(&cfg, &spec()).unwrap());
        let mut crowded = ula_cfg(4, 64);
        crowded.eve_density = 1e-2;
        assert_eq!(secrecy_rate_ula_lower(&crowded, &spec()).unwrap(), 0.0);
    }
}
