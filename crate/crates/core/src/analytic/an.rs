//! Artificial-noise transmission: each node splits its power between an
//! information beam and a noise beam with its own pattern.

use super::eve::eve_rate_for_levels;
use super::radial::{laplace_rate, EveLevel, InterferenceField};
use super::typical::{interference_lambda, jensen_density, jensen_rate, typical_signal};
use crate::antenna::sectored_pair_distribution;
use crate::config::SystemConfig;
use crate::error::Result;
use crate::numerics::QuadratureSpec;

/// Main-lobe signal gain of the typical link.
fn an_link_gain(cfg: &SystemConfig) -> Result<f64> {
    Ok(cfg.artificial_noise()?.signal.g_main * cfg.rx_pattern()?.g_main)
}

/// Exact typical-link rate when every interferer also radiates artificial noise.
pub fn avg_rate_typical_exact_an(cfg: &SystemConfig, spec: &QuadratureSpec) -> Result<f64> {
    cfg.validate()?;
    let (p_s, p_a) = cfg.an_powers()?;
    let levels = cfg
        .an_interferer_levels()?
        .iter()
        .map(|l| (p_s * l.signal_gain + p_a * l.noise_gain, l.probability))
        .collect();
    let field = InterferenceField {
        density: cfg.tx_density,
        levels,
        path_loss: &cfg.path_loss,
        blockage: &cfg.blockage,
    };
    let signal = typical_signal(cfg, p_s * an_link_gain(cfg)?);
    laplace_rate(&signal, &field, cfg.noise_rx, spec)
}

/// Exact strongest-eavesdropper rate when the typical transmitter's own
/// artificial noise reaches the eavesdropper.
pub fn avg_rate_eve_exact_an(cfg: &SystemConfig, spec: &QuadratureSpec) -> Result<f64> {
    cfg.validate()?;
    let (p_s, p_a) = cfg.an_powers()?;
    let beta = cfg.path_loss.beta;
    let levels: Vec<EveLevel> = cfg
        .an_eve_levels()?
        .iter()
        .map(|l| EveLevel {
            signal: p_s * l.signal_gain * beta,
            noise: p_a * l.noise_gain * beta,
            probability: l.probability,
        })
        .collect();
    eve_rate_for_levels(cfg, &levels, spec)
}

/// Interference weight `(Ḡ_S + (1 − μ)/μ · Ḡ_A) Λ` and normalised noise
/// `σ² / (μ P_t)` of the lower bound.
fn an_bound_terms(cfg: &SystemConfig) -> Result<(f64, f64)> {
    let an = cfg.artificial_noise()?;
    let rx = cfg.rx_pattern()?;
    let g_s = sectored_pair_distribution(&an.signal, &rx).mean();
    let g_a = sectored_pair_distribution(&an.noise, &rx).mean();
    let weight = (g_s + (1.0 - an.mu) / an.mu * g_a) * interference_lambda(cfg)?;
    Ok((weight, cfg.noise_rx / (an.mu * cfg.tx_power)))
}

/// Lower bound on the typical-link rate with artificial noise.
pub fn avg_rate_typical_lower_an(cfg: &SystemConfig) -> Result<f64> {
    cfg.validate()?;
    let (weight, noise) = an_bound_terms(cfg)?;
    Ok(jensen_rate(cfg, an_link_gain(cfg)?, weight, noise))
}

/// Largest transmitter density for which the artificial-noise lower bound
/// still reaches `r_th`.
pub fn max_density_for_rate_an(cfg: &SystemConfig, r_th: f64) -> Result<f64> {
    cfg.validate()?;
    let (weight, noise) = an_bound_terms(cfg)?;
    jensen_density(cfg, an_link_gain(cfg)?, weight, noise, r_th)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{avg_rate_eve_exact, avg_rate_typical_exact, avg_rate_typical_lower, max_density_for_rate};
    use crate::antenna::{upa_pattern, SectoredPattern};
    use crate::config::fixtures::upa16;
    use crate::config::ArtificialNoise;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::new(1e-10, 1e-14)
    }

    fn with_an(mu: f64) -> SystemConfig {
        let mut cfg = upa16(20.0);
        cfg.eve_antenna = Some(SectoredPattern::from_db(3.0, -3.0, 45.0).unwrap());
        cfg.an = Some(ArtificialNoise {
            mu,
            signal: upa_pattern(16).unwrap(),
            noise: SectoredPattern::from_db(5.0, -5.0, 60.0).unwrap(),
        });
        cfg
    }

    #[test]
    fn full_information_power_reduces_to_plain_model() {
        let cfg = with_an(1.0);
        let close = |a: f64, b: f64, tol: f64| (a - b).abs() <= tol * b.abs();
        assert!(close(
            avg_rate_typical_exact_an(&cfg, &spec()).unwrap(),
            avg_rate_typical_exact(&cfg, &spec()).unwrap(),
            1e-9
        ));
        assert!(close(
            avg_rate_eve_exact_an(&cfg, &spec()).unwrap(),
            avg_rate_eve_exact(&cfg, &spec()).unwrap(),
            1e-9
        ));
        assert!(close(
            avg_rate_typical_lower_an(&cfg).unwrap(),
            avg_rate_typical_lower(&cfg).unwrap(),
            1e-12
        ));
        assert!(close(
            max_density_for_rate_an(&cfg, 2.0).unwrap(),
            max_density_for_rate(&cfg, 2.0).unwrap(),
            1e-12
        ));
    }

    #[test]
    fn noise_power_hurts_eavesdropper_more_than_link_gain() {
        let full = with_an(1.0);
        let split = with_an(0.5);
        let eve_full = avg_rate_eve_exact_an(&full, &spec()).unwrap();
        let eve_split = avg_rate_eve_exact_an(&split, &spec()).unwrap();
        assert!(eve_split < eve_full);
        assert!(
            avg_rate_typical_exact_an(&split, &spec()).unwrap() < avg_rate_typical_exact_an(&full, &spec()).unwrap()
        );
    }

    #[test]
    fn lower_bound_below_exact() {
        for mu in [0.2, 0.5, 0.8, 1.0] {
            let cfg = with_an(mu);
            let lower = avg_rate_typical_lower_an(&cfg).unwrap();
            let exact = avg_rate_typical_exact_an(&cfg, &spec()).unwrap();
            assert!(lower <= exact, "μ={mu}: {lower} > {exact}");
        }
    }

    #[test]
    fn empty_populations() {
        let mut cfg = with_an(0.6);
        cfg.eve_density = 0.0;
        assert_eq!(avg_rate_eve_exact_an(&cfg, &spec()).unwrap(), 0.0);
        cfg.tx_density = 0.0;
        let (p_s, _) = cfg.an_powers().unwrap();
        let signal = typical_signal(&cfg, p_s * an_link_gain(&cfg).unwrap());
        let snr = |s: f64| s / cfg.noise_rx;
        let expect =
            signal.p_los * (1.0 + snr(signal.los)).log2() + (1.0 - signal.p_los) * (1.0 + snr(signal.nlos)).log2();
        let got = avg_rate_typical_exact_an(&cfg, &spec()).unwrap();
        assert!((got - expect).abs() <= 1e-9 * expect);
    }

    #[test]
    fn requires_an_section() {
        assert!(avg_rate_typical_exact_an(&upa16(20.0), &spec()).is_err());
    }
}
