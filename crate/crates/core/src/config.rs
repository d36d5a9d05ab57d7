//! Full scenario description shared by the analytic evaluators and the
//! simulator. All quantities are linear SI.

use serde::{Deserialize, Serialize};

use crate::antenna::{
    an_gain_levels, sectored_pair_distribution, upa_pattern, AnGainLevel, GainDistribution, SectoredPattern, UlaConfig,
};
use crate::error::{ensure_non_negative, ensure_positive, Error, Result};
use crate::geometry::{BlockageModel, PathLossModel};

/// Antennas of the legitimate transmitters and receivers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum AntennaModel {
    Sectored {
        tx: SectoredPattern,
        rx: SectoredPattern,
    },
    /// Sectored approximation of an `n`-element planar array at both ends.
    Upa {
        n: u32,
    },
    Ula(UlaConfig),
}

/// Power split between information signal and artificial noise, with the
/// beam patterns used for each.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArtificialNoise {
    /// Fraction of the transmit power carrying information, in `(0, 1]`.
    pub mu: f64,
    pub signal: SectoredPattern,
    pub noise: SectoredPattern,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemConfig {
    /// Hz.
    pub carrier_frequency: f64,
    /// Total transmit power per node, W.
    pub tx_power: f64,
    /// Transmitter density, per m².
    pub tx_density: f64,
    /// Eavesdropper density, per m².
    pub eve_density: f64,
    /// Transmitter-receiver separation, m.
    pub dipole_distance: f64,
    pub path_loss: PathLossModel,
    pub blockage: BlockageModel,
    /// Receiver noise power, W.
    pub noise_rx: f64,
    /// Eavesdropper noise power, W.
    pub noise_eve: f64,
    pub antenna: AntennaModel,
    /// Eavesdropper pattern; unused (and must be absent) for ULA, where the
    /// eavesdropper array size lives in [`UlaConfig`].
    pub eve_antenna: Option<SectoredPattern>,
    pub an: Option<ArtificialNoise>,
}

impl SystemConfig {
    pub fn validate(&self) -> Result<()> {
        ensure_positive("carrier_frequency", self.carrier_frequency)?;
        ensure_non_negative("tx_power", self.tx_power)?;
        ensure_non_negative("tx_density", self.tx_density)?;
        ensure_non_negative("eve_density", self.eve_density)?;
        ensure_positive("dipole_distance", self.dipole_distance)?;
        ensure_positive("noise_rx", self.noise_rx)?;
        ensure_positive("noise_eve", self.noise_eve)?;
        self.path_loss.validate()?;
        self.blockage.validate()?;
        match &self.antenna {
            AntennaModel::Sectored { tx, rx } => {
                tx.validate()?;
                rx.validate()?;
            }
            AntennaModel::Upa { n } => {
                upa_pattern(*n)?;
            }
            AntennaModel::Ula(ula) => {
                ula.validate()?;
                if self.eve_antenna.is_some() {
                    return Err(Error::invalid(
                        "eve_antenna",
                        "must be absent for the ULA model (set ula.n_eve instead)",
                    ));
                }
                if self.an.is_some() {
                    return Err(Error::invalid(
                        "an",
                        "artificial noise needs a sectored or UPA antenna model",
                    ));
                }
            }
        }
        if !matches!(self.antenna, AntennaModel::Ula(_)) {
            match &self.eve_antenna {
                Some(p) => p.validate()?,
                None => {
                    return Err(Error::invalid(
                        "eve_antenna",
                        "required unless the antenna model is ULA",
                    ))
                }
            }
        }
        if let Some(an) = &self.an {
            if !(an.mu > 0.0 && an.mu <= 1.0) {
                return Err(Error::invalid("an.mu", format!("must lie in (0, 1], got {}", an.mu)));
            }
            an.signal.validate()?;
            an.noise.validate()?;
        }
        Ok(())
    }

    pub fn tx_pattern(&self) -> Result<SectoredPattern> {
        match self.antenna {
            AntennaModel::Sectored { tx, .. } => Ok(tx),
            AntennaModel::Upa { n } => upa_pattern(n),
            AntennaModel::Ula(_) => Err(self.not_sectored()),
        }
    }

    pub fn rx_pattern(&self) -> Result<SectoredPattern> {
        match self.antenna {
            AntennaModel::Sectored { rx, .. } => Ok(rx),
            AntennaModel::Upa { n } => upa_pattern(n),
            AntennaModel::Ula(_) => Err(self.not_sectored()),
        }
    }

    pub fn eve_pattern(&self) -> Result<SectoredPattern> {
        self.eve_antenna
            .ok_or_else(|| Error::invalid("eve_antenna", "no sectored eavesdropper pattern configured"))
    }

    pub fn ula(&self) -> Result<UlaConfig> {
        match self.antenna {
            AntennaModel::Ula(u) => Ok(u),
            _ => Err(Error::NotApplicable {
                method: "ula".into(),
                reason: "antenna model is not ULA".into(),
            }),
        }
    }

    pub fn artificial_noise(&self) -> Result<ArtificialNoise> {
        self.an.ok_or_else(|| Error::NotApplicable {
            method: "an".into(),
            reason: "no artificial-noise section configured".into(),
        })
    }

    /// Main-lobe gain product of the typical link.
    pub fn typical_gain(&self) -> Result<f64> {
        Ok(self.tx_pattern()?.g_main * self.rx_pattern()?.g_main)
    }

    /// Gain distribution of an interferer at the typical receiver.
    pub fn interferer_gains(&self) -> Result<GainDistribution> {
        Ok(sectored_pair_distribution(&self.tx_pattern()?, &self.rx_pattern()?))
    }

    /// Gain distribution of the typical transmitter at an eavesdropper.
    pub fn eve_gains(&self) -> Result<GainDistribution> {
        Ok(sectored_pair_distribution(&self.tx_pattern()?, &self.eve_pattern()?))
    }

    /// Joint signal/noise gain levels of an interferer at the typical receiver.
    pub fn an_interferer_levels(&self) -> Result<Vec<AnGainLevel>> {
        let an = self.artificial_noise()?;
        Ok(an_gain_levels(&an.signal, &an.noise, &self.rx_pattern()?))
    }

    /// Joint signal/noise gain levels of the typical transmitter at an eavesdropper.
    pub fn an_eve_levels(&self) -> Result<Vec<AnGainLevel>> {
        let an = self.artificial_noise()?;
        Ok(an_gain_levels(&an.signal, &an.noise, &self.eve_pattern()?))
    }

    /// `(P_S, P_A)`.
    pub fn an_powers(&self) -> Result<(f64, f64)> {
        let an = self.artificial_noise()?;
        Ok((an.mu * self.tx_power, (1.0 - an.mu) * self.tx_power))
    }

    fn not_sectored(&self) -> Error {
        Error::NotApplicable {
            method: "sectored".into(),
            reason: "antenna model is ULA; sectored patterns are undefined".into(),
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::units::{dbm_to_watts, noise_power_dbm, per_km2};

    /// 28 GHz, UPA 16 at both ends, Table-style constants.
    pub fn upa16(tx_power_dbm: f64) -> SystemConfig {
        let f_c = 28e9;
        SystemConfig {
            carrier_frequency: f_c,
            tx_power: dbm_to_watts(tx_power_dbm),
            tx_density: per_km2(50.0),
            eve_density: per_km2(100.0),
            dipole_distance: 15.0,
            path_loss: PathLossModel::for_frequency(f_c, 2.0, 3.0, 1.0).unwrap(),
            blockage: BlockageModel::exponential_with_mean(141.4),
            noise_rx: dbm_to_watts(noise_power_dbm(2e9, 10.0)),
            noise_eve: dbm_to_watts(noise_power_dbm(2e9, 10.0)),
            antenna: AntennaModel::Upa { n: 16 },
            eve_antenna: Some(upa_pattern(16).unwrap()),
            an: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::upa16;
    use super::*;

    #[test]
    fn fixture_validates() {
        upa16(20.0).validate().unwrap();
    }

    #[test]
    fn rejects_each_violation() {
        let base = upa16(20.0);
        type Mutation = Box<dyn Fn(&mut SystemConfig)>;
        let cases: Vec<Mutation> = vec![
            Box::new(|c| c.tx_power = -1.0),
            Box::new(|c| c.tx_density = f64::NAN),
            Box::new(|c| c.dipole_distance = 0.0),
            Box::new(|c| c.noise_rx = 0.0),
            Box::new(|c| c.path_loss.alpha_nlos = 1.5),
            Box::new(|c| c.blockage = BlockageModel::LosBall { d_los: -3.0 }),
            Box::new(|c| c.eve_antenna = None),
            Box::new(|c| c.antenna = AntennaModel::Upa { n: 2 }),
            Box::new(|c| {
                c.an = Some(ArtificialNoise {
                    mu: 0.0,
                    signal: upa_pattern(16).unwrap(),
                    noise: upa_pattern(16).unwrap(),
                })
            }),
            Box::new(|c| c.antenna = AntennaModel::Ula(UlaConfig::new(8, 4))),
        ];
        for (i, mutate) in cases.iter().enumerate() {
            let mut c = base.clone();
            mutate(&mut c);
            assert!(c.validate().is_err(), "case {i} should be rejected");
        }
    }
}
