//! Unit conversions used at configuration and report boundaries.
//!
//! Everything inside the crate is linear SI: watts, metres, hertz, linear gains.

/// Speed of light used for the free-space path-loss constant, m/s.
pub const SPEED_OF_LIGHT: f64 = 3.0e8;

/// Thermal noise spectral density at room temperature, dBm/Hz.
pub const THERMAL_NOISE_DBM_PER_HZ: f64 = -174.0;

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

pub fn watts_to_dbm(watts: f64) -> f64 {
    10.0 * watts.log10() + 30.0
}

/// Receiver noise power in dBm for a bandwidth (Hz) and noise figure (dB).
pub fn noise_power_dbm(bandwidth_hz: f64, noise_figure_db: f64) -> f64 {
    THERMAL_NOISE_DBM_PER_HZ + 10.0 * bandwidth_hz.log10() + noise_figure_db
}

/// Nodes per km² to nodes per m².
pub fn per_km2(density: f64) -> f64 {
    density * 1e-6
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noise_floor_for_two_ghz_and_ten_db() {
        let dbm = noise_power_dbm(2e9, 10.0);
        assert!((dbm - (-70.9897)).abs() < 1e-4, "{dbm}");
    }

    #[test]
    fn dbm_round_trip() {
        for dbm in [-70.0, 0.0, 10.0, 30.0, 40.0] {
            assert!((watts_to_dbm(dbm_to_watts(dbm)) - dbm).abs() < 1e-12);
        }
        assert!((dbm_to_watts(30.0) - 1.0).abs() < 1e-15);
    }
}
